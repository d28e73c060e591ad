#pragma once

// The two-parameter small quantum group u_{r,s}(sl_n) (or its Borel half)
// as a finite-dimensional algebra with an explicit confluent straightening
// system onto the convex PBW-Lyndon monomial basis.
//
// Words are byte strings over a letter alphabet holding one letter per root
// vector and grouplike generator. Normal monomials are the ascending words
// with capped letter runs:
//   full scope:  F-block < omega-block < omega'-block < E-block
//   borel scope: E-block < omega-block
// The straightening rules are seeded from the defining relations and closed
// under critical pairs (Knuth-Bendix over the free algebra, deglex order);
// local confluence is established by the completion run itself and the
// resulting PBW shape of the rule set is verified before the handle is
// returned.

#include "uqrs/cartan.hpp"
#include "uqrs/cyclotomic.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace uqrs {

enum class Scope { Full, Borel };

std::string scope_name(Scope s);
Scope scope_from_string(const std::string& s);

struct AlgebraSpec {
    Family family = Family::A;
    int n = 2;      // u_{r,s}(sl_n); rank is n-1
    long order = 2; // L
    long x = 0;     // r = zeta^x
    long y = 1;     // s = zeta^y
    Scope scope = Scope::Full;
};

struct build_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct completion_budget_exceeded : build_error {
    using build_error::build_error;
};
struct non_pbw_system : build_error {
    using build_error::build_error;
};

using Letter = unsigned char;
using Word = std::string; // bytes are letter ids; "" is the unit monomial

/// deglex: length first, then lexicographic on letter ids.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

enum class GenKind { F, Omega, OmegaPrime, E };

struct LetterInfo {
    GenKind kind;
    int lo = 0, hi = 0; // root interval for E/F; lo == hi == index for omegas
};

/// Sparse linear combination of words with cyclotomic coefficients.
class Element {
public:
    using Terms = std::map<Word, Scalar, WordLess>;

    Element() = default;

    void add_term(const Word& w, const Scalar& c);
    void add_term(Word&& w, Scalar&& c);
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element scaled(const Scalar& c) const;
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Largest term in deglex order; element must be nonzero.
    const std::pair<const Word, Scalar>& leading() const;

    /// Remove and return the largest term.
    std::pair<Word, Scalar> pop_leading();

private:
    Terms terms_;
};

struct Rule {
    Word lhs;
    Element rhs; // every term strictly smaller than lhs
};

struct CompletionBudget {
    size_t max_rules = 4000;
    size_t max_lhs_degree = 64;
};

/// A generator reference with exponent, for building words of the public
/// presentation. Omega exponents may be negative; E/F exponents must be >= 0.
struct GenPower {
    GenKind kind;
    int index; // simple-root index, 1-based
    long exp;
};

class AlgebraHandle;
using AlgebraHandlePtr = std::shared_ptr<const AlgebraHandle>;

class AlgebraHandle {
public:
    /// Build with the frozen bracket coefficients, completing and verifying
    /// the straightening system. Throws build_error and subclasses.
    static AlgebraHandlePtr build(const AlgebraSpec& spec);

    /// Build from a previously completed rule set (cache load path); the
    /// PBW shape of the rules is re-verified, completion is not re-run.
    static AlgebraHandlePtr from_rules(const AlgebraSpec& spec, std::vector<Rule> rules);

    const AlgebraSpec& spec() const { return spec_; }
    const CyclotomicContext& context() const { return *ctx_; }
    const CartanDatum& cartan() const { return datum_; }
    Scalar r() const { return ctx_->root_of_unity(spec_.x); }
    Scalar s() const { return ctx_->root_of_unity(spec_.y); }

    int letter_count() const { return (int)letters_.size(); }
    const LetterInfo& letter(Letter l) const { return letters_[l]; }
    const std::vector<Rule>& rules() const { return rules_; }

    std::optional<Letter> find_letter(GenKind kind, int lo, int hi) const;
    Letter e_letter(int i, int j) const;
    Letter f_letter(int i, int j) const;
    Letter omega_letter(int i) const;
    Letter omega_prime_letter(int i) const;

    /// Defining bracket coefficient of a composite root-vector letter.
    const Scalar& bracket_coefficient(Letter l) const;

    /// omega/omega'-conjugation scalar: g x g^-1 = scalar * x for a
    /// grouplike letter g and root-vector letter x.
    Scalar conjugation_scalar(Letter grouplike, Letter rootvec) const;

    Element normal_form(const Element& raw) const;
    Element normal_form_word(const Word& w) const;
    /// Public-presentation entry: sequence of generator powers.
    /// Throws std::invalid_argument for unknown generators or negative E/F powers.
    Element normal_form(const std::vector<GenPower>& word) const;

    Element multiply(const Element& a, const Element& b) const;
    Element unit() const;
    Element scalar_element(const Scalar& c) const;
    Element generator(GenKind kind, int index) const;

    /// Root vectors E_(i,j) (and F_(i,j) in full scope), in normal form.
    Element root_vector(GenKind kind, int i, int j) const;

    unsigned long long dimension() const { return dimension_; }

    /// Deterministic enumeration of the PBW monomials; the first word is the
    /// unit. `index_of` inverts it.
    Word basis_word(unsigned long long index) const;
    unsigned long long index_of(const Word& w) const;
    std::vector<int> exponents_of(const Word& w) const;
    Word word_from_exponents(const std::vector<int>& exps) const;

    /// Per-letter exponent cap in normal monomials (L for root vectors and
    /// grouplikes alike).
    long exponent_bound(Letter l) const { return bounds_[l]; }

    std::string letter_name(Letter l) const;
    std::string to_string(const Element& e) const;

    /// True if the monomial has only grouplike letters.
    bool is_grouplike_word(const Word& w) const;

private:
    AlgebraSpec spec_;
    std::shared_ptr<const CyclotomicContext> ctx_;
    CartanDatum datum_;
    std::vector<LetterInfo> letters_;
    std::vector<Rule> rules_;
    std::vector<Scalar> bracket_coeff_; // per letter; unused entries zero
    std::vector<long> bounds_;
    std::vector<unsigned long long> strides_;
    unsigned long long dimension_ = 0;

    // rule lookup tables
    std::vector<int> pair_rule_;  // K*K, -1 if absent
    std::vector<int> power_rule_; // per letter, -1 if absent
    std::vector<std::vector<int>> other_rules_by_first_;

    AlgebraHandle() = default;
    void init_letters();
    void index_rules();
    void verify_shape_and_count();

    static AlgebraHandlePtr build_impl(const AlgebraSpec& spec, std::vector<Rule> preset,
                                       int ce_choice, int cf_choice,
                                       CompletionBudget budget = {});

    friend class RewriteCompleter;
    friend std::vector<std::string> search_bracket_coefficients(const AlgebraSpec&);

    int find_reduction(const Word& w, size_t pos) const;
    Element reduce_fully(Element pending) const;

    // memoized normal forms of boundary blocks x^a y^b, active once the
    // system is confluent; keeps repeated straightening cascades flat
    bool completed_ = false;
    const Element& block_normal_form(Letter x, int a, Letter y, int b) const;
    mutable std::unordered_map<uint32_t, Element> block_memo_;
    mutable std::shared_mutex memo_mutex_;
};

/// Validates candidate bracket-coefficient choices against the confluence
/// and dimension oracles; returns the list of (cE, cF) descriptions that
/// pass for the given spec. Used by the calibration test; build() uses the
/// frozen choice documented in the README.
std::vector<std::string> search_bracket_coefficients(const AlgebraSpec& spec);

} // namespace uqrs
