#include "uqrs/pbw.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>

namespace uqrs {

std::string scope_name(Scope s) { return s == Scope::Full ? "full" : "borel"; }

Scope scope_from_string(const std::string& s) {
    if (s == "full") return Scope::Full;
    if (s == "borel") return Scope::Borel;
    throw std::invalid_argument("unknown scope: " + s);
}

// ---------------------------------------------------------------- Element

void Element::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::add_term(Word&& w, Scalar&& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element Element::scaled(const Scalar& c) const {
    Element out;
    if (c.is_zero()) return out;
    for (const auto& [w, coef] : terms_) out.terms_.emplace(w, coef * c);
    return out;
}

const std::pair<const Word, Scalar>& Element::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero element");
    return *terms_.rbegin();
}

std::pair<Word, Scalar> Element::pop_leading() {
    auto it = std::prev(terms_.end());
    std::pair<Word, Scalar> out{it->first, it->second};
    terms_.erase(it);
    return out;
}

// ------------------------------------------------------------ letter setup

void AlgebraHandle::init_letters() {
    int rank = spec_.n - 1;
    auto roots = positive_roots_A(spec_.n);
    letters_.clear();
    if (spec_.scope == Scope::Full) {
        for (auto [i, j] : roots) letters_.push_back({GenKind::F, i, j});
        for (int i = 1; i <= rank; ++i) letters_.push_back({GenKind::Omega, i, i});
        for (int i = 1; i <= rank; ++i) letters_.push_back({GenKind::OmegaPrime, i, i});
        for (auto [i, j] : roots) letters_.push_back({GenKind::E, i, j});
    } else {
        for (auto [i, j] : roots) letters_.push_back({GenKind::E, i, j});
        for (int i = 1; i <= rank; ++i) letters_.push_back({GenKind::Omega, i, i});
    }
    if (letters_.size() > 250) throw build_error("alphabet too large");
    bracket_coeff_.assign(letters_.size(), ctx_->zero());
}

std::optional<Letter> AlgebraHandle::find_letter(GenKind kind, int lo, int hi) const {
    for (size_t l = 0; l < letters_.size(); ++l)
        if (letters_[l].kind == kind && letters_[l].lo == lo && letters_[l].hi == hi)
            return (Letter)l;
    return std::nullopt;
}

Letter AlgebraHandle::e_letter(int i, int j) const {
    auto l = find_letter(GenKind::E, i, j);
    if (!l) throw std::invalid_argument("no such root vector E");
    return *l;
}

Letter AlgebraHandle::f_letter(int i, int j) const {
    auto l = find_letter(GenKind::F, i, j);
    if (!l) throw std::invalid_argument("no such root vector F");
    return *l;
}

Letter AlgebraHandle::omega_letter(int i) const {
    auto l = find_letter(GenKind::Omega, i, i);
    if (!l) throw std::invalid_argument("no such grouplike");
    return *l;
}

Letter AlgebraHandle::omega_prime_letter(int i) const {
    auto l = find_letter(GenKind::OmegaPrime, i, i);
    if (!l) throw std::invalid_argument("no such grouplike");
    return *l;
}

const Scalar& AlgebraHandle::bracket_coefficient(Letter l) const {
    return bracket_coeff_[l];
}

Scalar AlgebraHandle::conjugation_scalar(Letter grouplike, Letter rootvec) const {
    const LetterInfo& g = letters_[grouplike];
    const LetterInfo& v = letters_[rootvec];
    Scalar rr = r(), ss = s();
    Scalar acc = ctx_->one();
    int i = g.lo;
    for (int k = v.lo; k <= v.hi; ++k) {
        long eki = euler_form(datum_, k, i);
        long eik = euler_form(datum_, i, k);
        if (g.kind == GenKind::Omega && v.kind == GenKind::E)
            acc *= rr.pow(eki) * ss.pow(-eik);
        else if (g.kind == GenKind::OmegaPrime && v.kind == GenKind::E)
            acc *= rr.pow(-eik) * ss.pow(eki);
        else if (g.kind == GenKind::Omega && v.kind == GenKind::F)
            acc *= rr.pow(-eki) * ss.pow(eik);
        else if (g.kind == GenKind::OmegaPrime && v.kind == GenKind::F)
            acc *= rr.pow(eik) * ss.pow(-eki);
        else
            throw std::invalid_argument("conjugation_scalar: bad letter kinds");
    }
    return acc;
}

// -------------------------------------------------------- rewrite machinery

namespace {

Word single(Letter l) { return Word(1, (char)l); }
Word run_of(Letter l, long k) { return Word((size_t)k, (char)l); }

} // namespace

int AlgebraHandle::find_reduction(const Word& w, size_t pos) const {
    const size_t K = letters_.size();
    Letter a = (Letter)w[pos];
    if (pos + 1 < w.size()) {
        int rp = pair_rule_[(size_t)a * K + (Letter)w[pos + 1]];
        if (rp >= 0) return rp;
    }
    int pw = power_rule_[a];
    if (pw >= 0) {
        size_t k = rules_[pw].lhs.size();
        if (pos + k <= w.size()) {
            bool run = true;
            for (size_t t = 1; t < k && run; ++t) run = ((Letter)w[pos + t] == a);
            if (run) return pw;
        }
    }
    for (int idx : other_rules_by_first_[a]) {
        const Word& l = rules_[idx].lhs;
        if (pos + l.size() <= w.size() && w.compare(pos, l.size(), l) == 0) return idx;
    }
    return -1;
}

Element AlgebraHandle::reduce_fully(Element pending) const {
    Element result;
    while (!pending.is_zero()) {
        auto [w, c] = pending.pop_leading();
        int rid = -1;
        size_t pos = 0;
        for (; pos < w.size(); ++pos) {
            rid = find_reduction(w, pos);
            if (rid >= 0) break;
        }
        if (rid < 0) {
            result.add_term(std::move(w), std::move(c));
            continue;
        }
        const Rule& rule = rules_[rid];
        if (completed_ && rule.lhs.size() == 2 && rule.lhs[0] != rule.lhs[1]) {
            // widen to the full runs around the descending boundary and
            // substitute the memoized block normal form in one step
            Letter x = (Letter)w[pos], y = (Letter)w[pos + 1];
            size_t p0 = pos;
            while (p0 > 0 && (Letter)w[p0 - 1] == x) --p0;
            size_t p1 = pos + 1;
            while (p1 + 1 < w.size() && (Letter)w[p1 + 1] == y) ++p1;
            const Element& block = block_normal_form(x, (int)(pos - p0 + 1), y, (int)(p1 - pos));
            for (const auto& [u, cu] : block.terms()) {
                Word nw;
                nw.reserve(p0 + u.size() + (w.size() - p1 - 1));
                nw.append(w, 0, p0);
                nw.append(u);
                nw.append(w, p1 + 1, Word::npos);
                pending.add_term(std::move(nw), c * cu);
            }
            continue;
        }
        for (const auto& [u, cu] : rule.rhs.terms()) {
            Word nw;
            nw.reserve(w.size() - rule.lhs.size() + u.size());
            nw.append(w, 0, pos);
            nw.append(u);
            nw.append(w, pos + rule.lhs.size(), Word::npos);
            pending.add_term(std::move(nw), c * cu);
        }
    }
    return result;
}

const Element& AlgebraHandle::block_normal_form(Letter x, int a, Letter y, int b) const {
    uint32_t key = (uint32_t)x | ((uint32_t)a << 8) | ((uint32_t)y << 16) | ((uint32_t)b << 24);
    {
        std::shared_lock lock(memo_mutex_);
        auto it = block_memo_.find(key);
        if (it != block_memo_.end()) return it->second;
    }
    const size_t K = letters_.size();
    const Rule& rule = rules_[pair_rule_[(size_t)x * K + y]];
    Element expanded;
    Word head = run_of(x, a - 1);
    Word tail = run_of(y, b - 1);
    for (const auto& [u, cu] : rule.rhs.terms()) expanded.add_term(head + u + tail, cu);
    Element nf = reduce_fully(std::move(expanded));
    std::unique_lock lock(memo_mutex_);
    auto [it, inserted] = block_memo_.emplace(key, std::move(nf));
    return it->second;
}

/// Seeds relations, runs pair completion, and keeps the handle's lookup
/// tables current while rules are added.
class RewriteCompleter {
public:
    RewriteCompleter(AlgebraHandle& h, CompletionBudget budget) : h_(h), budget_(budget) {}

    bool add_relation(Element raw) {
        Element nf = h_.reduce_fully(std::move(raw));
        if (nf.is_zero()) return false;
        const auto& lead = nf.leading();
        if (lead.first.empty()) throw non_pbw_system("unit collapses to zero");
        if (lead.first.size() > budget_.max_lhs_degree)
            throw completion_budget_exceeded("rule degree beyond budget");
        Word lhs = lead.first;
        Scalar inv_lead = lead.second.inverse();
        Element rhs;
        for (const auto& [w, c] : nf.terms())
            if (w != lhs) rhs.add_term(w, -(c * inv_lead));
        h_.rules_.push_back({std::move(lhs), std::move(rhs)});
        if (h_.rules_.size() > budget_.max_rules)
            throw completion_budget_exceeded("rule count beyond budget");
        index_rule((int)h_.rules_.size() - 1);
        size_t k = h_.rules_.size() - 1;
        for (size_t t = 0; t <= k; ++t) queue_.emplace_back(k, t);
        return true;
    }

    void complete() {
        while (!queue_.empty()) {
            auto [i, j] = queue_.front();
            queue_.pop_front();
            process(i, j);
            if (i != j) process(j, i);
        }
    }

    void index_rule(int idx) {
        const Word& l = h_.rules_[idx].lhs;
        const size_t K = h_.letters_.size();
        Letter a = (Letter)l[0];
        bool all_same = std::all_of(l.begin(), l.end(), [&](char c) { return (Letter)c == a; });
        if (l.size() >= 2 && all_same)
            h_.power_rule_[a] = idx;
        else if (l.size() == 2)
            h_.pair_rule_[(size_t)a * K + (Letter)l[1]] = idx;
        else
            h_.other_rules_by_first_[a].push_back(idx);
    }

private:
    void process(size_t i, size_t j) {
        const Word u = h_.rules_[i].lhs;
        const Word v = h_.rules_[j].lhs;
        size_t minlen = std::min(u.size(), v.size());
        for (size_t o = 1; o < minlen; ++o) {
            if (u.compare(u.size() - o, o, v, 0, o) != 0) continue;
            Word w = u + v.substr(o);
            resolve(w, i, 0, j, u.size() - o);
        }
        if (v.size() < u.size()) {
            for (size_t p = 0; p + v.size() <= u.size(); ++p)
                if (u.compare(p, v.size(), v) == 0) resolve(u, i, 0, j, p);
        }
    }

    void resolve(const Word& w, size_t ri, size_t pi, size_t rj, size_t pj) {
        Element a = apply(h_.rules_[ri], w, pi);
        Element diff = h_.reduce_fully(std::move(a));
        Element b = apply(h_.rules_[rj], w, pj);
        diff -= h_.reduce_fully(std::move(b));
        if (!diff.is_zero()) add_relation(std::move(diff));
    }

    Element apply(const Rule& r, const Word& w, size_t pos) const {
        Element out;
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + r.lhs.size());
        for (const auto& [u, c] : r.rhs.terms()) out.add_term(prefix + u + suffix, c);
        return out;
    }

    AlgebraHandle& h_;
    CompletionBudget budget_;
    std::deque<std::pair<size_t, size_t>> queue_;
};

void AlgebraHandle::index_rules() {
    const size_t K = letters_.size();
    pair_rule_.assign(K * K, -1);
    power_rule_.assign(K, -1);
    other_rules_by_first_.assign(K, {});
    RewriteCompleter indexer(*this, CompletionBudget{});
    for (int i = 0; i < (int)rules_.size(); ++i) indexer.index_rule(i);
}

// -------------------------------------------------------------- shape check

void AlgebraHandle::verify_shape_and_count() {
    const size_t K = letters_.size();

    // Interreduce: keep rules in deglex order of lhs, dropping any whose lhs
    // the kept set already reduces.
    std::vector<int> order(rules_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return WordLess{}(rules_[a].lhs, rules_[b].lhs);
    });
    std::vector<Rule> all = std::move(rules_);
    rules_.clear();
    index_rules();
    RewriteCompleter indexer(*this, CompletionBudget{});
    for (int idx : order) {
        const Word& l = all[idx].lhs;
        bool reducible = false;
        for (size_t pos = 0; pos < l.size() && !reducible; ++pos)
            reducible = (find_reduction(l, pos) >= 0);
        if (reducible) continue;
        rules_.push_back(std::move(all[idx]));
        indexer.index_rule((int)rules_.size() - 1);
    }
    for (auto& rule : rules_) rule.rhs = reduce_fully(rule.rhs);

    bounds_.assign(K, -1);
    for (const auto& rule : rules_) {
        const Word& l = rule.lhs;
        Letter a = (Letter)l[0];
        bool all_same = std::all_of(l.begin(), l.end(), [&](char c) { return (Letter)c == a; });
        if (l.size() >= 2 && all_same) {
            bounds_[a] = (long)l.size();
        } else if (l.size() == 2 && (Letter)l[0] > (Letter)l[1]) {
            // straightening rule for a descending pair
        } else {
            throw non_pbw_system("rule set is not in PBW shape near " + letter_name(a));
        }
    }
    for (size_t a = 0; a < K; ++a) {
        if (bounds_[a] < 0)
            throw non_pbw_system("missing power rule for " + letter_name((Letter)a));
        for (size_t b = 0; b < a; ++b)
            if (pair_rule_[a * K + b] < 0)
                throw non_pbw_system("missing straightening rule for " +
                                     letter_name((Letter)a) + " " + letter_name((Letter)b));
    }

    dimension_ = 1;
    strides_.assign(K, 1);
    for (int l = (int)K - 1; l >= 0; --l) {
        strides_[l] = dimension_;
        dimension_ *= (unsigned long long)bounds_[l];
    }
}

// ------------------------------------------------------------------- build

namespace {

void validate_spec(const AlgebraSpec& spec) {
    if (spec.family != Family::A) throw build_error("algebra engine supports type A only");
    if (spec.n < 2) throw build_error("need n >= 2");
    if (spec.order < 2) throw build_error("need order L >= 2");
    long L = spec.order;
    long x = ((spec.x % L) + L) % L;
    long y = ((spec.y % L) + L) % L;
    if (x == y) throw build_error("constraint violation: r == s");
    long ox = L / std::gcd(x, L);
    long oy = L / std::gcd(y, L);
    if (std::lcm(ox, oy) != L)
        throw build_error("constraint violation: lcm(ord r, ord s) != L");
}

} // namespace

AlgebraHandlePtr AlgebraHandle::build_impl(const AlgebraSpec& spec, std::vector<Rule> preset,
                                           int ce_choice, int cf_choice,
                                           CompletionBudget budget) {
    validate_spec(spec);
    auto h = std::shared_ptr<AlgebraHandle>(new AlgebraHandle());
    AlgebraHandle& a = *h;
    a.spec_ = spec;
    a.spec_.x = ((spec.x % spec.order) + spec.order) % spec.order;
    a.spec_.y = ((spec.y % spec.order) + spec.order) % spec.order;
    a.ctx_ = std::make_shared<CyclotomicContext>(spec.order);
    a.datum_ = cartan_datum(Family::A, spec.n - 1);
    a.init_letters();

    const Scalar rr = a.r(), ss = a.s();
    auto roots = positive_roots_A(spec.n);

    // bracket coefficients for composite root vectors
    const Scalar ce = (ce_choice == 0) ? ss : rr;
    const Scalar cf = (cf_choice == 0) ? rr.inverse() : ss.inverse();
    for (auto [i, j] : roots) {
        if (i == j) continue;
        a.bracket_coeff_[a.e_letter(i, j)] = ce;
        if (spec.scope == Scope::Full) a.bracket_coeff_[a.f_letter(i, j)] = cf;
    }

    if (!preset.empty()) {
        a.rules_ = std::move(preset);
        a.index_rules();
        a.verify_shape_and_count();
        a.completed_ = true;
        return h;
    }

    a.index_rules();
    RewriteCompleter completer(a, budget);
    const long L = spec.order;
    const int rank = spec.n - 1;

    std::vector<Letter> grouplikes, rootvecs;
    for (size_t l = 0; l < a.letters_.size(); ++l) {
        GenKind k = a.letters_[l].kind;
        if (k == GenKind::Omega || k == GenKind::OmegaPrime)
            grouplikes.push_back((Letter)l);
        else
            rootvecs.push_back((Letter)l);
    }

    // R1: grouplikes commute and have order L
    for (size_t i = 0; i < grouplikes.size(); ++i)
        for (size_t j = i + 1; j < grouplikes.size(); ++j) {
            Element rel;
            rel.add_term(single(grouplikes[j]) + single(grouplikes[i]), a.ctx_->one());
            rel.add_term(single(grouplikes[i]) + single(grouplikes[j]), -a.ctx_->one());
            completer.add_relation(std::move(rel));
        }
    for (Letter g : grouplikes) {
        Element rel;
        rel.add_term(run_of(g, L), a.ctx_->one());
        rel.add_term(Word{}, -a.ctx_->one());
        completer.add_relation(std::move(rel));
    }

    // R2/R3: grouplike conjugation of every root vector
    for (Letter g : grouplikes)
        for (Letter v : rootvecs) {
            Element rel;
            rel.add_term(single(g) + single(v), a.ctx_->one());
            rel.add_term(single(v) + single(g), -a.conjugation_scalar(g, v));
            completer.add_relation(std::move(rel));
        }

    // R4 (full scope)
    if (spec.scope == Scope::Full) {
        for (int i = 1; i <= rank; ++i)
            for (int j = 1; j <= rank; ++j) {
                Element rel;
                rel.add_term(single(a.e_letter(i, i)) + single(a.f_letter(j, j)), a.ctx_->one());
                rel.add_term(single(a.f_letter(j, j)) + single(a.e_letter(i, i)), -a.ctx_->one());
                if (i == j) {
                    long di = a.datum_.d[i - 1];
                    Scalar denom_inv = (rr.pow(di) - ss.pow(di)).inverse();
                    rel.add_term(single(a.omega_letter(i)), -denom_inv);
                    rel.add_term(single(a.omega_prime_letter(i)), denom_inv);
                }
                completer.add_relation(std::move(rel));
            }
    }

    // Lyndon bracket definitions of the composite root vectors
    for (auto [i, j] : roots) {
        if (i == j) continue;
        {
            Element rel;
            rel.add_term(single(a.e_letter(i, i)) + single(a.e_letter(i + 1, j)), a.ctx_->one());
            rel.add_term(single(a.e_letter(i + 1, j)) + single(a.e_letter(i, i)), -ce);
            rel.add_term(single(a.e_letter(i, j)), -a.ctx_->one());
            completer.add_relation(std::move(rel));
        }
        if (spec.scope == Scope::Full) {
            Element rel;
            rel.add_term(single(a.f_letter(i, i)) + single(a.f_letter(i + 1, j)), a.ctx_->one());
            rel.add_term(single(a.f_letter(i + 1, j)) + single(a.f_letter(i, i)), -cf);
            rel.add_term(single(a.f_letter(i, j)), -a.ctx_->one());
            completer.add_relation(std::move(rel));
        }
    }

    // R5/R6: quantum Serre relations
    const Scalar v = rr * ss.inverse();
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            if (i == j) continue;
            int m = 1 - a.datum_.a[i - 1][j - 1];
            Element rel_e, rel_f;
            long di = a.datum_.d[i - 1];
            Scalar vi = v.pow(di);
            for (int k = 0; k <= m; ++k) {
                Scalar coef = q_binomial(m, k, vi) * serre_coefficient(a.datum_, rr, ss, i, j, k);
                if (k % 2 == 1) coef = -coef;
                rel_e.add_term(run_of(a.e_letter(i, i), m - k) + single(a.e_letter(j, j)) +
                                   run_of(a.e_letter(i, i), k),
                               coef);
                if (spec.scope == Scope::Full)
                    rel_f.add_term(run_of(a.f_letter(i, i), k) + single(a.f_letter(j, j)) +
                                       run_of(a.f_letter(i, i), m - k),
                                   coef);
            }
            completer.add_relation(std::move(rel_e));
            if (spec.scope == Scope::Full) completer.add_relation(std::move(rel_f));
        }

    // R7: nilpotency of every root vector
    for (Letter vl : rootvecs) {
        Element rel;
        rel.add_term(run_of(vl, L), a.ctx_->one());
        completer.add_relation(std::move(rel));
    }

    completer.complete();
    a.verify_shape_and_count();
    a.completed_ = true;
    return h;
}

AlgebraHandlePtr AlgebraHandle::build(const AlgebraSpec& spec) {
    // frozen bracket convention: cE = s, cF = r^{-1} (see README)
    return build_impl(spec, {}, 0, 0);
}

AlgebraHandlePtr AlgebraHandle::from_rules(const AlgebraSpec& spec, std::vector<Rule> rules) {
    if (rules.empty()) throw build_error("from_rules: empty rule set");
    return build_impl(spec, std::move(rules), 0, 0);
}

std::vector<std::string> search_bracket_coefficients(const AlgebraSpec& spec) {
    static const char* names[2][2] = {{"cE=s,cF=r^-1", "cE=s,cF=s^-1"},
                                      {"cE=r,cF=r^-1", "cE=r,cF=s^-1"}};
    std::vector<std::string> winners;
    unsigned long long expect = 1;
    {
        long npos = (long)positive_roots_A(spec.n).size();
        long nlet = (spec.scope == Scope::Full) ? 2 * npos + 2 * (spec.n - 1) : npos + (spec.n - 1);
        for (long i = 0; i < nlet; ++i) expect *= (unsigned long long)spec.order;
    }
    for (int ce = 0; ce < 2; ++ce)
        for (int cf = 0; cf < 2; ++cf) {
            try {
                // invalid conventions diverge; a tight budget rejects them fast
                auto h = AlgebraHandle::build_impl(spec, {}, ce, cf, {250, 40});
                if (h->dimension() == expect) winners.push_back(names[ce][cf]);
            } catch (const build_error&) {
                // candidate rejected by the confluence/shape oracle
            }
        }
    return winners;
}

// ------------------------------------------------------------- public API

Element AlgebraHandle::normal_form(const Element& raw) const { return reduce_fully(raw); }

Element AlgebraHandle::normal_form_word(const Word& w) const {
    Element e;
    e.add_term(w, ctx_->one());
    return reduce_fully(std::move(e));
}

Element AlgebraHandle::normal_form(const std::vector<GenPower>& word) const {
    Word w;
    const long L = spec_.order;
    for (const auto& gp : word) {
        auto l = find_letter(gp.kind, gp.index, gp.index);
        if (!l) throw std::invalid_argument("unknown generator");
        long exp = gp.exp;
        if (gp.kind == GenKind::E || gp.kind == GenKind::F) {
            if (exp < 0) throw std::invalid_argument("negative power of a root vector");
        } else {
            exp = ((exp % L) + L) % L;
        }
        w += run_of(*l, exp);
    }
    return normal_form_word(w);
}

Element AlgebraHandle::multiply(const Element& x, const Element& b) const {
    Element raw;
    for (const auto& [wa, ca] : x.terms())
        for (const auto& [wb, cb] : b.terms()) raw.add_term(wa + wb, ca * cb);
    return reduce_fully(std::move(raw));
}

Element AlgebraHandle::unit() const {
    Element e;
    e.add_term(Word{}, ctx_->one());
    return e;
}

Element AlgebraHandle::scalar_element(const Scalar& c) const {
    Element e;
    e.add_term(Word{}, c);
    return e;
}

Element AlgebraHandle::generator(GenKind kind, int index) const {
    auto l = find_letter(kind, index, index);
    if (!l) throw std::invalid_argument("unknown generator");
    Element e;
    e.add_term(single(*l), ctx_->one());
    return e;
}

Element AlgebraHandle::root_vector(GenKind kind, int i, int j) const {
    if (kind != GenKind::E && kind != GenKind::F)
        throw std::invalid_argument("root_vector: kind must be E or F");
    auto l = find_letter(kind, i, j);
    if (!l) throw std::invalid_argument("invalid root interval");
    Element e;
    e.add_term(single(*l), ctx_->one());
    return e;
}

Word AlgebraHandle::basis_word(unsigned long long index) const {
    if (index >= dimension_) throw std::out_of_range("basis index");
    Word w;
    for (size_t l = 0; l < letters_.size(); ++l) {
        long exp = (long)(index / strides_[l]);
        index %= strides_[l];
        w += run_of((Letter)l, exp);
    }
    return w;
}

unsigned long long AlgebraHandle::index_of(const Word& w) const {
    unsigned long long idx = 0;
    size_t pos = 0;
    for (size_t l = 0; l < letters_.size(); ++l) {
        long run = 0;
        while (pos < w.size() && (Letter)w[pos] == (Letter)l) {
            ++run;
            ++pos;
        }
        if (run >= bounds_[l]) throw std::invalid_argument("not a normal monomial");
        idx += (unsigned long long)run * strides_[l];
    }
    if (pos != w.size()) throw std::invalid_argument("not a normal monomial");
    return idx;
}

std::vector<int> AlgebraHandle::exponents_of(const Word& w) const {
    std::vector<int> exps(letters_.size(), 0);
    size_t pos = 0;
    for (size_t l = 0; l < letters_.size(); ++l)
        while (pos < w.size() && (Letter)w[pos] == (Letter)l) {
            ++exps[l];
            ++pos;
        }
    if (pos != w.size()) throw std::invalid_argument("not a normal monomial");
    return exps;
}

Word AlgebraHandle::word_from_exponents(const std::vector<int>& exps) const {
    if (exps.size() != letters_.size()) throw std::invalid_argument("bad exponent vector");
    Word w;
    for (size_t l = 0; l < exps.size(); ++l) w += run_of((Letter)l, exps[l]);
    return w;
}

std::string AlgebraHandle::letter_name(Letter l) const {
    const LetterInfo& info = letters_[l];
    std::ostringstream out;
    switch (info.kind) {
        case GenKind::E:
            if (info.lo == info.hi) out << "e" << info.lo;
            else out << "E(" << info.lo << "," << info.hi << ")";
            break;
        case GenKind::F:
            if (info.lo == info.hi) out << "f" << info.lo;
            else out << "F(" << info.lo << "," << info.hi << ")";
            break;
        case GenKind::Omega: out << "w" << info.lo; break;
        case GenKind::OmegaPrime: out << "w'" << info.lo; break;
    }
    return out.str();
}

std::string AlgebraHandle::to_string(const Element& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (w.empty()) continue;
        size_t pos = 0;
        while (pos < w.size()) {
            size_t run = 1;
            while (pos + run < w.size() && w[pos + run] == w[pos]) ++run;
            out << " " << letter_name((Letter)w[pos]);
            if (run > 1) out << "^" << run;
            pos += run;
        }
    }
    return out.str();
}

bool AlgebraHandle::is_grouplike_word(const Word& w) const {
    for (char ch : w) {
        GenKind k = letters_[(Letter)ch].kind;
        if (k != GenKind::Omega && k != GenKind::OmegaPrime) return false;
    }
    return true;
}

} // namespace uqrs
