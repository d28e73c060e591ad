#include "uqrs/hopf.hpp"

#include <algorithm>

namespace uqrs {

// ----------------------------------------------------------- tensor types

void TensorElement::add_term(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{l, r};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, coef] : terms_) out.terms_.emplace(k, coef * c);
    return out;
}

void Tensor3Element::add_term(const Word& a, const Word& b, const Word& c, const Scalar& coef) {
    if (coef.is_zero()) return;
    Key k{a, b, c};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor3Element& Tensor3Element::operator-=(const Tensor3Element& o) {
    for (const auto& [k, c] : o.terms_) add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return *this;
}

// ----------------------------------------------------------------- HopfOps

HopfOps::HopfOps(AlgebraHandlePtr handle) : h_(std::move(handle)) {
    const AlgebraHandle& a = *h_;
    const long L = a.spec().order;
    const int K = a.letter_count();
    const Scalar one = a.context().one();

    for (Letter l = 0; l < (Letter)K; ++l) {
        GenKind k = a.letter(l).kind;
        if (k == GenKind::Omega || k == GenKind::OmegaPrime) grouplike_letters_.push_back(l);
    }

    // base coproducts and antipodes per letter; composite root vectors by
    // interval length so the bracket recursion sees its pieces
    std::vector<TensorElement> delta(K);
    std::vector<Element> anti(K), anti_inv(K);
    std::vector<Letter> order(K);
    for (int l = 0; l < K; ++l) order[l] = (Letter)l;
    std::sort(order.begin(), order.end(), [&](Letter p, Letter q) {
        return (a.letter(p).hi - a.letter(p).lo) < (a.letter(q).hi - a.letter(q).lo);
    });

    for (Letter l : order) {
        const LetterInfo& info = a.letter(l);
        Word w = Word(1, (char)l);
        switch (info.kind) {
            case GenKind::Omega:
            case GenKind::OmegaPrime: {
                delta[l].add_term(w, w, one);
                Element inv = a.normal_form({{info.kind, info.lo, -1}});
                anti[l] = inv;
                anti_inv[l] = inv;
                break;
            }
            case GenKind::E: {
                if (info.lo == info.hi) {
                    Word om = Word(1, (char)a.omega_letter(info.lo));
                    delta[l].add_term(w, Word{}, one);
                    delta[l].add_term(om, w, one);
                    // S(e) = -w^-1 e, S^-1(e) = -e w^-1
                    anti[l] = a.normal_form({{GenKind::Omega, info.lo, -1}, {GenKind::E, info.lo, 1}})
                                  .scaled(-one);
                    anti_inv[l] =
                        a.normal_form({{GenKind::E, info.lo, 1}, {GenKind::Omega, info.lo, -1}})
                            .scaled(-one);
                } else {
                    Letter head = a.e_letter(info.lo, info.lo);
                    Letter tail = a.e_letter(info.lo + 1, info.hi);
                    const Scalar& c = a.bracket_coefficient(l);
                    delta[l] = tensor_multiply_impl(delta[head], delta[tail]);
                    delta[l] -= tensor_multiply_impl(delta[tail], delta[head]).scaled(c);
                    anti[l] = a.multiply(anti[tail], anti[head]) -
                              a.multiply(anti[head], anti[tail]).scaled(c);
                    anti_inv[l] = a.multiply(anti_inv[tail], anti_inv[head]) -
                                  a.multiply(anti_inv[head], anti_inv[tail]).scaled(c);
                }
                break;
            }
            case GenKind::F: {
                if (info.lo == info.hi) {
                    Word omp = Word(1, (char)a.omega_prime_letter(info.lo));
                    delta[l].add_term(Word{}, w, one);
                    delta[l].add_term(w, omp, one);
                    // S(f) = -f w'^-1, S^-1(f) = -w'^-1 f
                    anti[l] =
                        a.normal_form({{GenKind::F, info.lo, 1}, {GenKind::OmegaPrime, info.lo, -1}})
                            .scaled(-one);
                    anti_inv[l] =
                        a.normal_form({{GenKind::OmegaPrime, info.lo, -1}, {GenKind::F, info.lo, 1}})
                            .scaled(-one);
                } else {
                    Letter head = a.f_letter(info.lo, info.lo);
                    Letter tail = a.f_letter(info.lo + 1, info.hi);
                    const Scalar& c = a.bracket_coefficient(l);
                    delta[l] = tensor_multiply_impl(delta[head], delta[tail]);
                    delta[l] -= tensor_multiply_impl(delta[tail], delta[head]).scaled(c);
                    anti[l] = a.multiply(anti[tail], anti[head]) -
                              a.multiply(anti[head], anti[tail]).scaled(c);
                    anti_inv[l] = a.multiply(anti_inv[tail], anti_inv[head]) -
                                  a.multiply(anti_inv[head], anti_inv[tail]).scaled(c);
                }
                break;
            }
        }
    }

    // cached powers up to L-1
    delta_pow_.resize(K);
    antipode_pow_.resize(K);
    antipode_inv_pow_.resize(K);
    TensorElement tunit;
    tunit.add_term(Word{}, Word{}, one);
    for (int l = 0; l < K; ++l) {
        delta_pow_[l].resize(L);
        antipode_pow_[l].resize(L);
        antipode_inv_pow_[l].resize(L);
        delta_pow_[l][0] = tunit;
        antipode_pow_[l][0] = a.unit();
        antipode_inv_pow_[l][0] = a.unit();
        for (long k = 1; k < L; ++k) {
            delta_pow_[l][k] = tensor_multiply_impl(delta_pow_[l][k - 1], delta[l]);
            antipode_pow_[l][k] = a.multiply(antipode_pow_[l][k - 1], anti[l]);
            antipode_inv_pow_[l][k] = a.multiply(antipode_inv_pow_[l][k - 1], anti_inv[l]);
        }
    }
}

TensorElement HopfOps::tensor_multiply_impl(const TensorElement& A, const TensorElement& B) const {
    const AlgebraHandle& a = *h_;
    TensorElement out;
    std::map<std::pair<Word, Word>, Element, TensorElement::KeyLess> memo;
    auto product = [&](const Word& u, const Word& v) -> const Element& {
        auto key = std::make_pair(u, v);
        auto it = memo.find(key);
        if (it == memo.end()) {
            Element raw;
            raw.add_term(u + v, a.context().one());
            it = memo.emplace(std::move(key), a.normal_form(raw)).first;
        }
        return it->second;
    };
    for (const auto& [ka, ca] : A.terms())
        for (const auto& [kb, cb] : B.terms()) {
            const Element& left = product(ka.first, kb.first);
            if (left.is_zero()) continue;
            const Element& right = product(ka.second, kb.second);
            if (right.is_zero()) continue;
            Scalar c = ca * cb;
            for (const auto& [wl, cl] : left.terms())
                for (const auto& [wr, cr] : right.terms()) out.add_term(wl, wr, c * cl * cr);
        }
    return out;
}

TensorElement HopfOps::tensor_multiply(const TensorElement& A, const TensorElement& B) const {
    return tensor_multiply_impl(A, B);
}

TensorElement HopfOps::coproduct_word(const Word& w) const {
    TensorElement acc;
    acc.add_term(Word{}, Word{}, h_->context().one());
    size_t pos = 0;
    while (pos < w.size()) {
        Letter l = (Letter)w[pos];
        size_t run = 1;
        while (pos + run < w.size() && (Letter)w[pos + run] == (Letter)l) ++run;
        acc = tensor_multiply_impl(acc, delta_pow_[l][run]);
        pos += run;
    }
    return acc;
}

TensorElement HopfOps::coproduct(const Element& a) const {
    TensorElement out;
    for (const auto& [w, c] : a.terms()) out += coproduct_word(w).scaled(c);
    return out;
}

Tensor3Element HopfOps::coproduct_sq(const Element& a) const {
    Tensor3Element out;
    TensorElement first = coproduct(a);
    for (const auto& [k, c] : first.terms()) {
        TensorElement inner = coproduct_word(k.first);
        for (const auto& [ki, ci] : inner.terms())
            out.add_term(ki.first, ki.second, k.second, c * ci);
    }
    return out;
}

Tensor3Element HopfOps::coproduct_sq_right(const Element& a) const {
    Tensor3Element out;
    TensorElement first = coproduct(a);
    for (const auto& [k, c] : first.terms()) {
        TensorElement inner = coproduct_word(k.second);
        for (const auto& [ki, ci] : inner.terms())
            out.add_term(k.first, ki.first, ki.second, c * ci);
    }
    return out;
}

Scalar HopfOps::counit(const Element& a) const {
    Scalar acc = h_->context().zero();
    for (const auto& [w, c] : a.terms())
        if (h_->is_grouplike_word(w)) acc += c;
    return acc;
}

Element HopfOps::apply_antipode(const Word& w, const std::vector<std::vector<Element>>& pow) const {
    // anti-homomorphism: letters reversed, runs stay runs
    Element acc = h_->unit();
    size_t pos = w.size();
    while (pos > 0) {
        size_t end = pos;
        Letter l = (Letter)w[pos - 1];
        while (pos > 0 && (Letter)w[pos - 1] == l) --pos;
        acc = h_->multiply(acc, pow[l][end - pos]);
    }
    return acc;
}

Element HopfOps::antipode(const Element& a) const {
    Element out;
    for (const auto& [w, c] : a.terms()) out += apply_antipode(w, antipode_pow_).scaled(c);
    return out;
}

Element HopfOps::antipode_inv(const Element& a) const {
    Element out;
    for (const auto& [w, c] : a.terms()) out += apply_antipode(w, antipode_inv_pow_).scaled(c);
    return out;
}

TensorElement HopfOps::power_coproduct_e(int j, int a) const {
    const AlgebraHandle& h = *h_;
    const long L = h.spec().order;
    if (a < 0 || a > L) throw std::invalid_argument("power_coproduct_e: need 0 <= a <= L");
    long dj = h.cartan().d[j - 1];
    Scalar rj = h.r().pow(dj), sj = h.s().pow(dj);
    TensorElement out;
    for (int i = 0; i <= a; ++i) {
        Scalar coef = sj.pow((long)i * (i - a)) * rs_bracket_binomial(a, i, rj, sj);
        Element left = h.normal_form({{GenKind::E, j, i}, {GenKind::Omega, j, a - i}});
        Element right = h.normal_form({{GenKind::E, j, a - i}});
        for (const auto& [wl, cl] : left.terms())
            for (const auto& [wr, cr] : right.terms()) out.add_term(wl, wr, coef * cl * cr);
    }
    return out;
}

TensorElement HopfOps::power_coproduct_f(int j, int a) const {
    const AlgebraHandle& h = *h_;
    const long L = h.spec().order;
    if (a < 0 || a > L) throw std::invalid_argument("power_coproduct_f: need 0 <= a <= L");
    long dj = h.cartan().d[j - 1];
    Scalar rj = h.r().pow(dj), sj = h.s().pow(dj);
    TensorElement out;
    for (int i = 0; i <= a; ++i) {
        Scalar coef = rj.pow((long)i * (i - a)) * rs_bracket_binomial(a, i, rj, sj);
        Element left = h.normal_form({{GenKind::F, j, a - i}});
        Element right = h.normal_form({{GenKind::OmegaPrime, j, a - i}, {GenKind::F, j, i}});
        for (const auto& [wl, cl] : left.terms())
            for (const auto& [wr, cr] : right.terms()) out.add_term(wl, wr, coef * cl * cr);
    }
    return out;
}

Word HopfOps::grouplike_word(const GrouplikeExps& exps) const {
    if (exps.size() != grouplike_letters_.size())
        throw std::invalid_argument("grouplike exponent vector has wrong length");
    const long L = h_->spec().order;
    Word w;
    for (size_t i = 0; i < exps.size(); ++i) {
        long e = ((exps[i] % L) + L) % L;
        w += Word((size_t)e, (char)grouplike_letters_[i]);
    }
    return w;
}

const std::map<std::pair<Word, Word>, std::vector<Word>>& HopfOps::support_index() const {
    std::call_once(support_once_, [&] {
        const AlgebraHandle& a = *h_;
        const long L = a.spec().order;
        const int K = a.letter_count();
        const int rank = a.spec().n - 1;

        std::vector<int> exps(K, 0);
        std::vector<long> gamma_omega(rank), gamma_omegap(rank), delta_omega(rank),
            delta_omegap(rank);
        while (true) {
            // weights of the current exponent vector
            bool has_rootvec = false;
            std::fill(gamma_omega.begin(), gamma_omega.end(), 0);
            std::fill(gamma_omegap.begin(), gamma_omegap.end(), 0);
            std::fill(delta_omega.begin(), delta_omega.end(), 0);
            std::fill(delta_omegap.begin(), delta_omegap.end(), 0);
            for (int l = 0; l < K; ++l) {
                if (!exps[l]) continue;
                const LetterInfo& info = a.letter(l);
                switch (info.kind) {
                    case GenKind::Omega:
                        gamma_omega[info.lo - 1] += exps[l];
                        delta_omega[info.lo - 1] += exps[l];
                        break;
                    case GenKind::OmegaPrime:
                        gamma_omegap[info.lo - 1] += exps[l];
                        delta_omegap[info.lo - 1] += exps[l];
                        break;
                    case GenKind::E:
                        has_rootvec = true;
                        for (int t = info.lo; t <= info.hi; ++t)
                            delta_omega[t - 1] += exps[l];
                        break;
                    case GenKind::F:
                        has_rootvec = true;
                        for (int t = info.lo; t <= info.hi; ++t)
                            gamma_omegap[t - 1] += exps[l];
                        break;
                }
            }
            if (has_rootvec) {
                GrouplikeExps gamma, delta;
                for (int t = 0; t < rank; ++t) gamma.push_back(gamma_omega[t]);
                if (a.spec().scope == Scope::Full)
                    for (int t = 0; t < rank; ++t) gamma.push_back(gamma_omegap[t]);
                for (int t = 0; t < rank; ++t) delta.push_back(delta_omega[t]);
                if (a.spec().scope == Scope::Full)
                    for (int t = 0; t < rank; ++t) delta.push_back(delta_omegap[t]);
                support_index_[{grouplike_word(gamma), grouplike_word(delta)}].push_back(
                    a.word_from_exponents(exps));
            }
            // odometer
            int l = K - 1;
            while (l >= 0) {
                if (++exps[l] < a.exponent_bound((Letter)l)) break;
                exps[l] = 0;
                --l;
            }
            if (l < 0) break;
        }
    });
    return support_index_;
}

SkewPrimitiveSpace HopfOps::skew_primitive_space(const GrouplikeExps& g_exps,
                                                 const GrouplikeExps& h_exps) const {
    const AlgebraHandle& a = *h_;
    const Scalar one = a.context().one();
    Word g = grouplike_word(g_exps);
    Word h = grouplike_word(h_exps);

    std::vector<Word> candidates{g};
    if (h != g) candidates.push_back(h);
    const auto& index = support_index();
    auto it = index.find({g, h});
    if (it != index.end())
        for (const Word& w : it->second) candidates.push_back(w);

    const size_t C = candidates.size();

    // rows of Delta(w) - w@g - h@w, keyed by tensor monomial
    std::map<TensorElement::Key, std::vector<std::pair<size_t, Scalar>>, TensorElement::KeyLess>
        rows;
    for (size_t c = 0; c < C; ++c) {
        TensorElement t = coproduct_word(candidates[c]);
        t.add_term(candidates[c], g, -one);
        t.add_term(h, candidates[c], -one);
        for (const auto& [k, coef] : t.terms()) rows[k].emplace_back(c, coef);
    }

    // Gauss-Jordan over the candidate coordinates
    std::vector<std::vector<Scalar>> pivots; // fully reduced rows
    std::vector<size_t> pivot_col;
    for (const auto& [key, sparse] : rows) {
        std::vector<Scalar> row(C, a.context().zero());
        for (const auto& [c, coef] : sparse) row[c] += coef;
        for (size_t p = 0; p < pivots.size(); ++p) {
            if (row[pivot_col[p]].is_zero()) continue;
            Scalar f = row[pivot_col[p]];
            for (size_t c = 0; c < C; ++c) row[c] -= f * pivots[p][c];
        }
        size_t lead = C;
        for (size_t c = 0; c < C; ++c)
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        if (lead == C) continue;
        Scalar inv = row[lead].inverse();
        for (size_t c = 0; c < C; ++c) row[c] *= inv;
        for (size_t p = 0; p < pivots.size(); ++p) {
            if (pivots[p][lead].is_zero()) continue;
            Scalar f = pivots[p][lead];
            for (size_t c = 0; c < C; ++c) pivots[p][c] -= f * row[c];
        }
        pivots.push_back(std::move(row));
        pivot_col.push_back(lead);
    }

    std::vector<bool> is_pivot(C, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    SkewPrimitiveSpace out;
    out.support = candidates;
    for (size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Element basis_elem;
        basis_elem.add_term(candidates[f], one);
        for (size_t p = 0; p < pivots.size(); ++p)
            basis_elem.add_term(candidates[pivot_col[p]], -pivots[p][f]);
        out.basis.push_back(std::move(basis_elem));
    }
    out.dimension = (long)out.basis.size();
    return out;
}

} // namespace uqrs
