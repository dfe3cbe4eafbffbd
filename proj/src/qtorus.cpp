#include "qcluster/qtorus.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qcluster {

// ---------------------------------------------------------------- QCoeff

QCoeff QCoeff::q_power(const Rat& alpha, std::int64_t c) {
    QCoeff r;
    if (c) r.terms_.emplace_back(alpha, c);
    return r;
}

QCoeff QCoeff::from_unsorted(std::vector<Term> t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    QCoeff r;
    std::size_t i = 0;
    while (i < t.size()) {
        std::int64_t s = 0;
        std::size_t j = i;
        for (; j < t.size() && t[j].first == t[i].first; ++j) s = checked_add(s, t[j].second);
        if (s) r.terms_.emplace_back(t[i].first, s);
        i = j;
    }
    return r;
}

QCoeff QCoeff::operator+(const QCoeff& o) const {
    QCoeff r;
    auto i = terms_.begin(), j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            r.terms_.push_back(*i++);
        } else if (i == terms_.end() || j->first < i->first) {
            r.terms_.push_back(*j++);
        } else {
            auto c = checked_add(i->second, j->second);
            if (c) r.terms_.emplace_back(i->first, c);
            ++i, ++j;
        }
    }
    return r;
}

QCoeff QCoeff::operator-() const {
    QCoeff r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

QCoeff QCoeff::operator-(const QCoeff& o) const { return *this + (-o); }

QCoeff QCoeff::operator*(const QCoeff& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (terms_.size() == 1 && o.terms_.size() == 1) {
        return q_power(terms_[0].first + o.terms_[0].first, checked_mul(terms_[0].second, o.terms_[0].second));
    }
    std::vector<Term> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) t.emplace_back(a.first + b.first, checked_mul(a.second, b.second));
    return from_unsorted(std::move(t));
}

QCoeff QCoeff::bar() const {
    QCoeff r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

QCoeff QCoeff::shifted(const Rat& alpha) const {
    QCoeff r = *this;
    for (auto& t : r.terms_) t.first += alpha;
    return r;
}

QCoeff QCoeff::rescaled(const Rat& rho) const {
    if (rho <= Rat(0)) throw InputError("rescaling factor must be positive");
    QCoeff r = *this;
    for (auto& t : r.terms_) t.first *= rho;
    return r;
}

std::optional<Rat> QCoeff::unit_exponent() const {
    if (terms_.size() == 1 && terms_[0].second == 1) return terms_[0].first;
    return std::nullopt;
}

std::int64_t QCoeff::at_one() const {
    std::int64_t s = 0;
    for (auto& t : terms_) s = checked_add(s, t.second);
    return s;
}

bool QCoeff::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

bool QCoeff::strictly_negative_exponents() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first < Rat(0); });
}

std::int64_t QCoeff::denominator_lcm() const {
    std::int64_t l = 1;
    for (auto& t : terms_) l = lcm64(l, t.first.denominator());
    return l;
}

std::optional<QCoeff> QCoeff::divide_exact(const QCoeff& d) const {
    if (d.is_zero()) throw MathError("division by zero coefficient");
    if (is_zero()) return QCoeff();
    if (d.terms_.size() == 1) {
        std::vector<Term> t;
        for (auto& [e, c] : terms_) {
            if (c % d.terms_[0].second) return std::nullopt;
            t.emplace_back(e - d.terms_[0].first, c / d.terms_[0].second);
        }
        QCoeff r;
        r.terms_ = std::move(t);
        return r;
    }
    // Long division from the top exponent; the quotient's exponents lie in a known window.
    QCoeff rem = *this, quot;
    Rat lo = terms_.front().first - d.terms_.front().first;
    const auto& [dtop, dc] = d.terms_.back();
    while (!rem.is_zero()) {
        const auto& [rtop, rc] = rem.terms_.back();
        Rat e = rtop - dtop;
        if (e < lo || rc % dc) return std::nullopt;
        QCoeff step = q_power(e, rc / dc);
        quot += step;
        rem -= step * d;
    }
    return quot;
}

std::string QCoeff::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        std::int64_t a = c;
        if (!first) {
            os << (c < 0 ? "-" : "+");
            a = c < 0 ? -c : c;
        } else if (c < 0 && e != Rat(0) && c == -1) {
            os << "-";
            a = 1;
        }
        if (e == Rat(0)) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q^(" << to_string(e) << ")";
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- ExpVec

ExpVec ExpVec::operator+(const ExpVec& o) const {
    if (o.size() != size()) throw InputError("exponent vectors of different sizes");
    ExpVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.v_[i] = checked_add(v_[i], o.v_[i]);
    return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const { return *this + (-o); }

ExpVec ExpVec::operator-() const {
    ExpVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.v_[i] = -v_[i];
    return r;
}

ExpVec ExpVec::operator*(std::int64_t k) const {
    ExpVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.v_[i] = checked_mul(v_[i], k);
    return r;
}

bool ExpVec::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

std::string ExpVec::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- QLaurent

QLaurent QLaurent::monomial(const ExpVec& g, const QCoeff& c) {
    QLaurent z(g.size());
    z.add_term(g, c);
    return z;
}

QLaurent QLaurent::constant(std::size_t n, const QCoeff& c) { return monomial(ExpVec(n), c); }

void QLaurent::check_dim(const QLaurent& o) const {
    if (o.n_ != n_) throw InputError("Laurent polynomials over different index sets");
}

QCoeff QLaurent::coeff(const ExpVec& g) const {
    auto it = t_.find(g);
    return it == t_.end() ? QCoeff() : it->second;
}

void QLaurent::add_term(const ExpVec& g, const QCoeff& c) {
    if (g.size() != n_) throw InputError("exponent vector does not match the index set");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    check_dim(o);
    for (auto& [g, c] : o.t_) add_term(g, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    check_dim(o);
    for (auto& [g, c] : o.t_) add_term(g, -c);
    return *this;
}

QLaurent QLaurent::operator+(const QLaurent& o) const {
    QLaurent r = *this;
    r += o;
    return r;
}

QLaurent QLaurent::operator-(const QLaurent& o) const {
    QLaurent r = *this;
    r -= o;
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& [g, c] : r.t_) c = -c;
    return r;
}

QLaurent QLaurent::scaled(const QCoeff& c) const {
    QLaurent r(n_);
    if (c.is_zero()) return r;
    for (auto& [g, a] : t_) r.t_.emplace_hint(r.t_.end(), g, a * c);
    return r;
}

QLaurent QLaurent::shifted(const ExpVec& g) const {
    QLaurent r(n_);
    for (auto& [h, a] : t_) r.t_.emplace(h + g, a);
    return r;
}

QLaurent QLaurent::bar() const {
    QLaurent r(n_);
    for (auto& [g, a] : t_) r.t_.emplace_hint(r.t_.end(), g, a.bar());
    return r;
}

QLaurent QLaurent::rescaled(const Rat& rho) const {
    QLaurent r(n_);
    for (auto& [g, a] : t_) r.t_.emplace_hint(r.t_.end(), g, a.rescaled(rho));
    return r;
}

QLaurent QLaurent::at_q_one() const {
    QLaurent r(n_);
    for (auto& [g, a] : t_) r.add_term(g, QCoeff(a.at_one()));
    return r;
}

bool QLaurent::coefficients_nonnegative() const {
    return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.nonnegative(); });
}

std::int64_t QLaurent::min_exponent(std::size_t i) const {
    if (t_.empty()) throw InputError("exponent of the zero polynomial");
    std::int64_t m = t_.begin()->first[i];
    for (auto& [g, a] : t_) m = std::min(m, g[i]);
    return m;
}

std::int64_t QLaurent::max_exponent(std::size_t i) const {
    if (t_.empty()) throw InputError("exponent of the zero polynomial");
    std::int64_t m = t_.begin()->first[i];
    for (auto& [g, a] : t_) m = std::max(m, g[i]);
    return m;
}

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
    return v;
}

std::string QLaurent::str(const std::vector<std::string>& names_in) const {
    if (t_.empty()) return "0";
    auto names = names_in.empty() ? default_names(n_) : names_in;
    std::ostringstream os;
    bool first = true;
    for (auto& [g, c] : t_) {
        std::string mono;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!g[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (g[i] != 1) mono += "^" + std::to_string(g[i]);
        }
        // Single-term coefficients print inline; sums are parenthesised.
        std::string coef;
        bool negative = false;
        if (c.terms().size() == 1) {
            auto [e, k] = c.terms()[0];
            negative = k < 0;
            std::int64_t a = negative ? -k : k;
            if (e != Rat(0)) coef = (a != 1 ? std::to_string(a) + "*" : "") + "q^(" + to_string(e) + ")";
            else if (a != 1 || mono.empty()) coef = std::to_string(a);
        } else {
            coef = "(" + c.str() + ")";
        }
        std::string term = coef;
        if (!mono.empty()) term += (coef.empty() ? "" : "*") + mono;
        if (first) os << (negative ? "-" : "") << term;
        else os << (negative ? " - " : " + ") << term;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class LaurentParser {
  public:
    LaurentParser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {}

    QLaurent parse() {
        QLaurent z = expr();
        skip();
        if (p_ != s_.size()) fail("trailing input");
        return z;
    }

  private:
    const std::string& s_;
    const std::vector<std::string>& names_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cannot parse Laurent polynomial at offset " + std::to_string(p_) + ": " + what);
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }

    QLaurent comm_mul(const QLaurent& a, const QLaurent& b) const {
        QLaurent r(names_.size());
        for (auto& [g, c] : a.terms())
            for (auto& [h, d] : b.terms()) r.add_term(g + h, c * d);
        return r;
    }

    QLaurent expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        QLaurent z = term();
        if (neg) z = -z;
        for (;;) {
            if (eat('+')) z += term();
            else if (eat('-')) z -= term();
            else break;
        }
        return z;
    }

    QLaurent term() {
        QLaurent z = factor();
        while (eat('*')) z = comm_mul(z, factor());
        return z;
    }

    std::string read_number_token() {
        skip();
        std::size_t b = p_;
        if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
        while (p_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p_])) || s_[p_] == '/')) ++p_;
        if (b == p_) fail("number expected");
        return s_.substr(b, p_ - b);
    }

    Rat exponent() {
        if (eat('(')) {
            Rat r = parse_rat(read_number_token());
            if (!eat(')')) fail("')' expected");
            return r;
        }
        return parse_rat(read_number_token());
    }

    QLaurent factor() {
        skip();
        std::size_t n = names_.size();
        if (p_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            QLaurent z = expr();
            if (!eat(')')) fail("')' expected");
            return z;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            Rat r = parse_rat(read_number_token());
            if (!is_integer(r)) fail("integer coefficient expected");
            return QLaurent::constant(n, QCoeff(r.numerator()));
        }
        // Longest variable name first so that x1 does not shadow x12.
        std::size_t best = names_.size(), best_len = 0;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const auto& nm = names_[i];
            if (nm.size() > best_len && s_.compare(p_, nm.size(), nm) == 0) best = i, best_len = nm.size();
        }
        if (best < names_.size()) {
            p_ += best_len;
            std::int64_t e = 1;
            if (eat('^')) {
                Rat r = exponent();
                if (!is_integer(r)) fail("integer variable exponent expected");
                e = r.numerator();
            }
            ExpVec g(n);
            g[best] = e;
            return QLaurent::monomial(g);
        }
        if (s_[p_] == 'q') {
            ++p_;
            Rat e(1);
            if (eat('^')) e = exponent();
            return QLaurent::constant(n, QCoeff::q_power(e));
        }
        fail("unknown symbol");
    }
};

}  // namespace

QLaurent parse_laurent(const std::string& text, const std::vector<std::string>& names) {
    return LaurentParser(text, names).parse();
}

// ---------------------------------------------------------------- QuantumTorus

QuantumTorus::QuantumTorus(IntMatrix lambda) : L_(std::move(lambda)) {
    if (!is_skew(L_)) throw InputError("quantization matrix is not skew-symmetric");
}

std::int64_t QuantumTorus::form(const ExpVec& g, const ExpVec& h) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!g[i]) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (h[j] && L_(i, j)) s = checked_add(s, checked_mul(checked_mul(g[i], L_(i, j)), h[j]));
    }
    return s;
}

void QuantumTorus::check_budget(std::size_t n) const {
    if (n > max_terms) throw BudgetError("term budget exceeded (" + std::to_string(n) + " terms)");
}

QLaurent QuantumTorus::mul(const QLaurent& a, const QLaurent& b) const {
    if (a.dim() != dim() || b.dim() != dim()) throw InputError("product over a different index set");
    check_budget(a.size() * b.size());
    // Precompute Lambda h for the right factor so each pair costs O(n).
    std::vector<std::vector<std::int64_t>> lh;
    lh.reserve(b.size());
    for (auto& [h, c] : b.terms()) lh.push_back(mat_vec(L_, h.data()));
    QLaurent r(dim());
    for (auto& [g, c] : a.terms()) {
        std::size_t idx = 0;
        for (auto& [h, d] : b.terms()) {
            const auto& v = lh[idx++];
            std::int64_t f = 0;
            for (std::size_t i = 0; i < dim(); ++i)
                if (g[i]) f = checked_add(f, checked_mul(g[i], v[i]));
            QCoeff cd = c * d;
            r.add_term(g + h, f ? cd.shifted(Rat(f, 2)) : cd);
        }
    }
    check_budget(r.size());
    return r;
}

QLaurent QuantumTorus::pow(const QLaurent& a, std::int64_t k) const {
    if (k < 0) throw InputError("negative power of a Laurent polynomial");
    QLaurent r = QLaurent::constant(dim(), QCoeff(1));
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

QLaurent QuantumTorus::mono_mul(const ExpVec& g, const QLaurent& z) const {
    QLaurent r(dim());
    for (auto& [h, c] : z.terms()) r.add_term(g + h, c.shifted(half_form(g, h)));
    return r;
}

QLaurent QuantumTorus::mul_mono(const QLaurent& z, const ExpVec& g) const {
    QLaurent r(dim());
    for (auto& [h, c] : z.terms()) r.add_term(h + g, c.shifted(half_form(h, g)));
    return r;
}

QLaurent QuantumTorus::inverse_monomial(const QLaurent& m) const {
    if (!m.is_monomial()) throw MathError("inverse of a non-monomial");
    const auto& [g, c] = *m.terms().begin();
    if (c.terms().size() != 1 || (c.terms()[0].second != 1 && c.terms()[0].second != -1))
        throw MathError("inverse of a monomial with non-unit coefficient");
    // (c q^a x^g)^{-1} = c q^{-a} x^{-g}, since x^g * x^{-g} = 1.
    return QLaurent::monomial(-g, QCoeff::q_power(-c.terms()[0].first, c.terms()[0].second));
}

QLaurent QuantumTorus::left_divide(const QLaurent& a, const QLaurent& n) const {
    if (a.is_zero()) throw MathError("division by zero");
    QLaurent q(dim());
    if (n.is_zero()) return q;
    if (a.is_monomial()) {
        const auto& c = a.terms().begin()->second;
        if (c.terms().size() == 1 && (c.terms()[0].second == 1 || c.terms()[0].second == -1))
            return mul(inverse_monomial(a), n);
    }
    // Leading terms in the lexicographic (group) order multiply; quotient exponents lie in the box
    // determined by the Newton polytopes.
    std::size_t d = dim();
    ExpVec lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = n.min_exponent(i) - a.max_exponent(i);
        hi[i] = n.max_exponent(i) - a.min_exponent(i);
    }
    const auto& [atop, ac] = *a.terms().rbegin();
    QLaurent rem = n;
    while (!rem.is_zero()) {
        const auto& [rtop, rc] = *rem.terms().rbegin();
        ExpVec m = rtop - atop;
        for (std::size_t i = 0; i < d; ++i)
            if (m[i] < lo[i] || m[i] > hi[i]) throw ConsistencyError("inexact left division in the quantum torus");
        auto c = rc.divide_exact(ac.shifted(half_form(atop, m)));
        if (!c) throw ConsistencyError("inexact coefficient division in the quantum torus");
        q.add_term(m, *c);
        rem -= mul(a, QLaurent::monomial(m, *c));
        check_budget(q.size() + rem.size());
    }
    return q;
}

bool QuantumTorus::q_commute(const QLaurent& a, const QLaurent& b, Rat* exponent) const {
    if (a.is_zero() || b.is_zero()) return true;
    QLaurent ab = mul(a, b), ba = mul(b, a);
    const auto& [ga, ca] = *a.terms().rbegin();
    const auto& [gb, cb] = *b.terms().rbegin();
    // Compare at the lexicographic leading terms to extract the candidate exponent.
    Rat e = Rat(form(ga, gb));
    if (exponent) *exponent = e;
    return ab == ba.scaled(QCoeff::q_power(e));
}

// ---------------------------------------------------------------- dominance

DominanceOrder::DominanceOrder(const IntMatrix& Btilde) : B_(Btilde) {
    std::size_t m = B_.cols();
    auto rows = independent_rows(B_);
    if (!rows) throw UnsupportedSeedError("B-matrix is not of full rank; dominance order unavailable");
    rows_ = *rows;
    RatMatrix sub(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sub(i, j) = Rat(B_(rows_[i], j));
    inv_ = *inverse(sub);
    // w supported on rows_: sub^T w_R = -1.
    w_.assign(B_.rows(), Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < m; ++j) s -= inv_(j, i);
        w_[rows_[i]] = s;
    }
}

std::optional<std::vector<std::int64_t>> DominanceOrder::solve(const ExpVec& diff) const {
    std::size_t m = B_.cols();
    if (diff.size() != B_.rows()) throw InputError("dominance: dimension mismatch");
    std::vector<std::int64_t> n(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < m; ++j) s += inv_(i, j) * diff[rows_[j]];
        if (!is_integer(s)) return std::nullopt;
        n[i] = s.numerator();
    }
    if (mat_vec(B_, n) != diff.data()) return std::nullopt;
    return n;
}

std::optional<std::vector<std::int64_t>> DominanceOrder::leq(const ExpVec& h, const ExpVec& g) const {
    auto n = solve(h - g);
    if (!n) return std::nullopt;
    for (auto x : *n)
        if (x < 0) return std::nullopt;
    return n;
}

Rat DominanceOrder::weight(const ExpVec& e) const {
    Rat s = 0;
    for (std::size_t i : rows_) s += w_[i] * e[i];
    return s;
}

ExpVec a_maximal_exponent(const QLaurent& z, const DominanceOrder& dom) {
    if (z.is_zero()) throw InputError("zero element has no exponents");
    const ExpVec* best = nullptr;
    Rat bw;
    for (auto& [g, c] : z.terms()) {
        Rat w = dom.weight(g);
        if (!best || w >= bw) best = &g, bw = w;
    }
    return *best;
}

namespace {

std::optional<ExpVec> extremal(const QLaurent& z, const DominanceOrder& dom, bool top) {
    if (z.is_zero()) throw InputError("degree of the zero element");
    const ExpVec* best = nullptr;
    Rat bw;
    bool tie = false;
    for (auto& [g, c] : z.terms()) {
        Rat w = dom.weight(g);
        if (!best || (top ? w > bw : w < bw)) best = &g, bw = w, tie = false;
        else if (w == bw) tie = true;
    }
    if (tie) return std::nullopt;
    for (auto& [g, c] : z.terms()) {
        if (g == *best) continue;
        if (top ? !dom.leq(g, *best) : !dom.leq(*best, g)) return std::nullopt;
    }
    return *best;
}

}  // namespace

std::optional<ExpVec> degree(const QLaurent& z, const DominanceOrder& dom) { return extremal(z, dom, true); }
std::optional<ExpVec> codegree(const QLaurent& z, const DominanceOrder& dom) { return extremal(z, dom, false); }

std::optional<PointedElement> pointed(const QLaurent& z, const DominanceOrder& dom) {
    auto g = degree(z, dom);
    if (!g) return std::nullopt;
    auto u = z.coeff(*g).unit_exponent();
    return PointedElement{z, *g, u && *u == Rat(0)};
}

PointedElement normalize(const QLaurent& z, const DominanceOrder& dom) {
    auto g = degree(z, dom);
    if (!g) throw MathError("normalization of an element without a unique maximal degree");
    auto u = z.coeff(*g).unit_exponent();
    if (!u) throw MathError("normalization: leading coefficient " + z.coeff(*g).str() + " is not a q-power");
    return PointedElement{z.scaled(QCoeff::q_power(-*u)), *g, true};
}

std::vector<std::int64_t> supp_dim(const QLaurent& z, const DominanceOrder& dom) {
    auto g = degree(z, dom);
    if (!g) throw MathError("support of an element without a unique maximal degree");
    std::vector<std::int64_t> s(dom.matrix().cols(), 0);
    for (auto& [h, c] : z.terms()) {
        auto n = dom.leq(h, *g);
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = std::max(s[k], (*n)[k]);
    }
    return s;
}

std::vector<std::size_t> support(const QLaurent& z, const DominanceOrder& dom) {
    auto s = supp_dim(z, dom);
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k]) r.push_back(k);
    return r;
}

}  // namespace qcluster
