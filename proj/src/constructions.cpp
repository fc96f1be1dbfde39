#include "anticode/constructions.hpp"

#include "anticode/errors.hpp"

#include <algorithm>
#include <string>

namespace anticode {

std::string to_string(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::A: return "A";
        case Family::A_eps: return "A-eps";
        case Family::zero_prefix: return "zero-prefix";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "F" || s == "f") return Family::F;
    if (s == "A" || s == "a") return Family::A;
    if (s == "A-eps" || s == "a-eps" || s == "aeps") return Family::A_eps;
    if (s == "zero-prefix" || s == "zeroprefix") return Family::zero_prefix;
    return {};
}

FamilyParams::FamilyParams(int q_, int n_, int k_, int t_, int eps_)
    : q(q_), n(n_), k(k_), t(t_), eps(eps_) {
    SpaceParams check(n, q, k);  // validates n, q, k ranges
    (void)check;
    if (t < 0 || t > n)
        throw invalid_params("prefix length t must be in [0, n], got t=" + std::to_string(t));
    if (eps < 0)
        throw invalid_params("eps must be nonnegative, got eps=" + std::to_string(eps));
}

namespace {

// F and A_eps share the constraints n >= k > t >= 0, 0 <= eps <= k - t.
void require_prefix_family(const FamilyParams& p) {
    if (p.t >= p.k)
        throw invalid_params("family needs k > t, got t=" + std::to_string(p.t) +
                             ", k=" + std::to_string(p.k));
    if (p.eps > p.k - p.t)
        throw invalid_params("eps must be in [0, k-t], got eps=" + std::to_string(p.eps) +
                             " with k-t=" + std::to_string(p.k - p.t));
}

}  // namespace

Bigint size_formula(const FamilyParams& p) {
    require_prefix_family(p);
    return binomial(p.n - p.t - p.eps, p.k - p.t - p.eps) *
           ipow(p.q - 1, static_cast<std::uint64_t>(p.k - p.t));
}

std::optional<int> diameter_formula(const FamilyParams& p) {
    require_prefix_family(p);
    if (!p.diameter_applicable()) return {};
    return p.target_diameter();
}

Bigint zero_prefix_size(int q, int t, int k, int n) {
    return binomial(n - t, k) * ipow(q - 1, static_cast<std::uint64_t>(k));
}

std::optional<int> zero_prefix_diameter(int q, int t, int k, int n) {
    // For q = 2 equal-weight words sit at even distances, so the odd value
    // n - t cannot be met; the formula needs a third symbol to disagree on
    // overlapping supports.
    if (q < 3 || n - t > 2 * k) return {};
    return n - t;
}

namespace {

void guard_size(const Bigint& count, std::uint64_t max_words) {
    if (count > max_words)
        throw resource_limit("family too large to materialize", count.str());
}

}  // namespace

CodeSet construct_F(const FamilyParams& p, std::uint64_t max_words) {
    FamilyParams f(p.q, p.n, p.k, p.t, 0);
    require_prefix_family(f);
    guard_size(size_formula(f), max_words);
    std::vector<Word> words;
    // k > t forces n > t, so the tail is nonempty.
    const SpaceParams tail(f.n - f.t, f.q, f.k - f.t);
    ConstantWeightEnumerator en(tail);
    Word w = Word::zero(tail.n, tail.q);
    while (en.next(w)) {
        std::vector<Symbol> s(static_cast<std::size_t>(f.n), 0);
        std::fill_n(s.begin(), f.t, Symbol{1});
        std::copy(w.symbols().begin(), w.symbols().end(), s.begin() + f.t);
        words.emplace_back(std::move(s), f.q);
    }
    return CodeSet::from_words(SpaceParams(f.n, f.q, f.k), true, SetKind::family, words);
}

CodeSet construct_A_eps(const FamilyParams& p, std::uint64_t max_words) {
    require_prefix_family(p);
    guard_size(size_formula(p), max_words);
    if (p.eps == 0) {
        CodeSet base = construct_F(p, max_words);
        return CodeSet::from_words(base.params(), true, SetKind::anticode,
                                   [&] {
                                       std::vector<Word> ws;
                                       ws.reserve(base.size());
                                       for (std::size_t i = 0; i < base.size(); ++i)
                                           ws.push_back(base.word(i));
                                       return ws;
                                   }());
    }
    std::vector<Word> words;
    // Middle segment: eps coordinates, each over [1, q-1]; tail: weight
    // k-t-eps over the remaining n-t-eps coordinates.
    std::vector<Symbol> mid(static_cast<std::size_t>(p.eps), 1);
    const int tail_len = p.n - p.t - p.eps;
    const int tail_wt = p.k - p.t - p.eps;
    auto emit_with_tail = [&](const std::vector<Symbol>& tail_syms) {
        std::vector<Symbol> s(static_cast<std::size_t>(p.n), 0);
        std::fill_n(s.begin(), p.t, Symbol{1});
        std::copy(mid.begin(), mid.end(), s.begin() + p.t);
        std::copy(tail_syms.begin(), tail_syms.end(), s.begin() + p.t + p.eps);
        words.emplace_back(std::move(s), p.q);
    };
    auto sweep_tails = [&] {
        if (tail_len == 0) {
            emit_with_tail({});
            return;
        }
        ConstantWeightEnumerator en(SpaceParams(tail_len, p.q, tail_wt));
        Word w = Word::zero(tail_len, p.q);
        while (en.next(w)) emit_with_tail(w.symbols());
    };
    // Odometer over the middle segment.
    for (;;) {
        sweep_tails();
        int i = p.eps - 1;
        while (i >= 0 && mid[static_cast<std::size_t>(i)] + 1 >= p.q) --i;
        if (i < 0) break;
        ++mid[static_cast<std::size_t>(i)];
        std::fill(mid.begin() + i + 1, mid.end(), Symbol{1});
    }
    return CodeSet::from_words(SpaceParams(p.n, p.q, p.k), true, SetKind::anticode, words);
}

CodeSet construct_zero_prefix(int q, int t, int k, int n, std::uint64_t max_words) {
    SpaceParams space(n, q, k);
    if (t < 0 || t > n - k)
        throw invalid_params("zero prefix length t must be in [0, n-k], got t=" +
                             std::to_string(t));
    guard_size(zero_prefix_size(q, t, k, n), max_words);
    std::vector<Word> words;
    ConstantWeightEnumerator en(SpaceParams(n - t, q, k));
    Word w = Word::zero(n - t, q);
    while (en.next(w)) {
        std::vector<Symbol> s(static_cast<std::size_t>(n), 0);
        std::copy(w.symbols().begin(), w.symbols().end(), s.begin() + t);
        words.emplace_back(std::move(s), q);
    }
    return CodeSet::from_words(space, true, SetKind::anticode, words);
}

CodeSet construct(Family f, const FamilyParams& p, std::uint64_t max_words) {
    switch (f) {
        case Family::F: return construct_F(p, max_words);
        case Family::A: return construct_A_eps(FamilyParams(p.q, p.n, p.k, p.t, 1), max_words);
        case Family::A_eps: return construct_A_eps(p, max_words);
        case Family::zero_prefix: return construct_zero_prefix(p.q, p.t, p.k, p.n, max_words);
    }
    throw invalid_params("unknown family");
}

Bigint family_size_formula(Family f, const FamilyParams& p) {
    switch (f) {
        case Family::F: return size_formula(FamilyParams(p.q, p.n, p.k, p.t, 0));
        case Family::A: return size_formula(FamilyParams(p.q, p.n, p.k, p.t, 1));
        case Family::A_eps: return size_formula(p);
        case Family::zero_prefix: return zero_prefix_size(p.q, p.t, p.k, p.n);
    }
    throw invalid_params("unknown family");
}

std::optional<int> family_diameter_formula(Family f, const FamilyParams& p) {
    switch (f) {
        case Family::F: return diameter_formula(FamilyParams(p.q, p.n, p.k, p.t, 0));
        case Family::A: return diameter_formula(FamilyParams(p.q, p.n, p.k, p.t, 1));
        case Family::A_eps: return diameter_formula(p);
        case Family::zero_prefix: return zero_prefix_diameter(p.q, p.t, p.k, p.n);
    }
    throw invalid_params("unknown family");
}

}  // namespace anticode
