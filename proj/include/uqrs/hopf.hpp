#pragma once

// Hopf structure maps over a built algebra handle: coproduct, counit,
// antipode and its inverse, closed-form coproduct powers, and the
// skew-primitive space solver. Tensor legs are always kept in PBW normal
// form, so equality of tensors is coefficient comparison.

#include "uqrs/pbw.hpp"

#include <mutex>

namespace uqrs {

class TensorElement {
public:
    using Key = std::pair<Word, Word>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            WordLess less;
            if (a.first != b.first) return less(a.first, b.first);
            return less(a.second, b.second);
        }
    };
    using Terms = std::map<Key, Scalar, KeyLess>;

    void add_term(const Word& l, const Word& r, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement scaled(const Scalar& c) const;
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

private:
    Terms terms_;
};

class Tensor3Element {
public:
    using Key = std::tuple<Word, Word, Word>;
    using Terms = std::map<Key, Scalar>;

    void add_term(const Word& a, const Word& b, const Word& c, const Scalar& coef);
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Tensor3Element& operator-=(const Tensor3Element& o);
    friend bool operator==(const Tensor3Element& a, const Tensor3Element& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

/// Grouplike exponents over the handle's grouplike letters in letter order
/// (omega_1..omega_N, then omega'_1..omega'_N in full scope).
using GrouplikeExps = std::vector<long>;

struct SkewPrimitiveSpace {
    long dimension = 0;
    std::vector<Element> basis;       // echelonized, deterministic
    std::vector<Word> support;        // candidate monomials examined
};

class HopfOps {
public:
    explicit HopfOps(AlgebraHandlePtr handle);

    const AlgebraHandle& algebra() const { return *h_; }
    AlgebraHandlePtr handle() const { return h_; }

    TensorElement coproduct(const Element& a) const;
    TensorElement coproduct_word(const Word& w) const;

    /// (Delta (x) id) Delta — the fixed association used by the module action.
    Tensor3Element coproduct_sq(const Element& a) const;
    /// (id (x) Delta) Delta — for the coassociativity check.
    Tensor3Element coproduct_sq_right(const Element& a) const;

    Scalar counit(const Element& a) const;
    Element antipode(const Element& a) const;
    Element antipode_inv(const Element& a) const;

    /// Closed-form coproduct of e_j^a resp. f_j^a via bracket binomials.
    TensorElement power_coproduct_e(int j, int a) const;
    TensorElement power_coproduct_f(int j, int a) const;

    TensorElement tensor_multiply(const TensorElement& A, const TensorElement& B) const;

    Word grouplike_word(const GrouplikeExps& exps) const;
    int grouplike_rank() const { return (int)grouplike_letters_.size(); }

    /// Solution space of Delta(x) = x (x) g + h (x) x by exact elimination.
    /// The search space is cut down by the grouplike-weight support
    /// conditions read off the extreme bidegree components; degree zero
    /// contributes only the span of {g, h}.
    SkewPrimitiveSpace skew_primitive_space(const GrouplikeExps& g,
                                            const GrouplikeExps& h) const;

private:
    AlgebraHandlePtr h_;
    std::vector<Letter> grouplike_letters_;
    // per letter: Delta(letter)^k, S(letter)^k, S^{-1}(letter)^k for k < L
    std::vector<std::vector<TensorElement>> delta_pow_;
    std::vector<std::vector<Element>> antipode_pow_;
    std::vector<std::vector<Element>> antipode_inv_pow_;

    // lazily built index: (gamma, delta) grouplike weights -> basis words of
    // positive root-vector degree
    mutable std::once_flag support_once_;
    mutable std::map<std::pair<Word, Word>, std::vector<Word>> support_index_;
    const std::map<std::pair<Word, Word>, std::vector<Word>>& support_index() const;

    TensorElement tensor_multiply_impl(const TensorElement& A, const TensorElement& B) const;
    Element apply_antipode(const Word& w, const std::vector<std::vector<Element>>& pow) const;
};

} // namespace uqrs
