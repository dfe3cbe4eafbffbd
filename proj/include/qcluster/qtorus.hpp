#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/matrix.hpp"
#include "qcluster/rational.hpp"

namespace qcluster {

// Element of Z[q^{±1/N}]: a sparse sum of c * q^alpha with rational alpha.
class QCoeff {
  public:
    using Term = std::pair<Rat, std::int64_t>;

    QCoeff() = default;
    QCoeff(std::int64_t c) {  // NOLINT: integers embed as constants
        if (c) terms_.emplace_back(Rat(0), c);
    }
    static QCoeff q_power(const Rat& alpha, std::int64_t c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    QCoeff operator+(const QCoeff& o) const;
    QCoeff operator-(const QCoeff& o) const;
    QCoeff operator*(const QCoeff& o) const;
    QCoeff operator-() const;
    QCoeff& operator+=(const QCoeff& o) { return *this = *this + o; }
    QCoeff& operator-=(const QCoeff& o) { return *this = *this - o; }
    QCoeff& operator*=(const QCoeff& o) { return *this = *this * o; }
    bool operator==(const QCoeff& o) const { return terms_ == o.terms_; }
    bool operator!=(const QCoeff& o) const { return !(*this == o); }

    QCoeff bar() const;
    QCoeff shifted(const Rat& alpha) const;  // times q^alpha
    QCoeff rescaled(const Rat& rho) const;   // q^alpha -> q^(rho alpha)
    std::optional<QCoeff> divide_exact(const QCoeff& d) const;

    // Set when the coefficient is exactly +q^gamma.
    std::optional<Rat> unit_exponent() const;
    bool is_bar_invariant() const { return *this == bar(); }
    std::int64_t at_one() const;
    bool nonnegative() const;
    // True when every exponent is strictly negative (the ideal q^{-1/2}Z[q^{-1/2}] for half-integer data).
    bool strictly_negative_exponents() const;
    std::int64_t denominator_lcm() const;

    std::string str() const;

  private:
    std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients
    static QCoeff from_unsorted(std::vector<Term> t);
};

// Integer exponent vector indexed by the vertex positions of a seed.
class ExpVec {
  public:
    ExpVec() = default;
    explicit ExpVec(std::size_t n) : v_(n, 0) {}
    ExpVec(std::vector<std::int64_t> v) : v_(std::move(v)) {}  // NOLINT
    ExpVec(std::initializer_list<std::int64_t> v) : v_(v) {}
    static ExpVec unit(std::size_t n, std::size_t i) {
        ExpVec e(n);
        e.v_[i] = 1;
        return e;
    }

    std::size_t size() const { return v_.size(); }
    std::int64_t& operator[](std::size_t i) { return v_[i]; }
    std::int64_t operator[](std::size_t i) const { return v_[i]; }
    const std::vector<std::int64_t>& data() const { return v_; }

    ExpVec operator+(const ExpVec& o) const;
    ExpVec operator-(const ExpVec& o) const;
    ExpVec operator-() const;
    ExpVec operator*(std::int64_t k) const;
    ExpVec& operator+=(const ExpVec& o) { return *this = *this + o; }
    bool operator==(const ExpVec& o) const { return v_ == o.v_; }
    bool operator!=(const ExpVec& o) const { return v_ != o.v_; }
    bool operator<(const ExpVec& o) const { return v_ < o.v_; }
    bool is_zero() const;

    std::string str() const;

  private:
    std::vector<std::int64_t> v_;
};

// Sparse Laurent polynomial sum c_g x^g; x^g denotes the bar-invariant (Weyl-ordered) monomial.
class QLaurent {
  public:
    using TermMap = std::map<ExpVec, QCoeff>;

    explicit QLaurent(std::size_t n = 0) : n_(n) {}
    static QLaurent monomial(const ExpVec& g, const QCoeff& c = QCoeff(1));
    static QLaurent constant(std::size_t n, const QCoeff& c);

    std::size_t dim() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const TermMap& terms() const { return t_; }
    QCoeff coeff(const ExpVec& g) const;
    void add_term(const ExpVec& g, const QCoeff& c);

    QLaurent operator+(const QLaurent& o) const;
    QLaurent operator-(const QLaurent& o) const;
    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    bool operator==(const QLaurent& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    QLaurent scaled(const QCoeff& c) const;
    // Commutative product with a monomial: shifts every exponent by g.
    QLaurent shifted(const ExpVec& g) const;
    QLaurent bar() const;
    QLaurent rescaled(const Rat& rho) const;
    QLaurent at_q_one() const;
    bool is_monomial() const { return t_.size() == 1; }
    bool coefficients_nonnegative() const;
    std::int64_t min_exponent(std::size_t i) const;
    std::int64_t max_exponent(std::size_t i) const;

    // Canonical text: terms in lexicographic exponent order.
    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    std::size_t n_ = 0;
    TermMap t_;
    void check_dim(const QLaurent& o) const;
};

// Parses the canonical text form; products inside a term are commutative (they build x^g).
QLaurent parse_laurent(const std::string& text, const std::vector<std::string>& names);
std::vector<std::string> default_names(std::size_t n);

// The quantum torus of a skew form Lambda: x^g * x^h = q^{lambda(g,h)/2} x^{g+h}.
class QuantumTorus {
  public:
    explicit QuantumTorus(IntMatrix lambda);
    static QuantumTorus classical(std::size_t n) { return QuantumTorus(IntMatrix(n, n)); }

    std::size_t dim() const { return L_.rows(); }
    const IntMatrix& lambda() const { return L_; }
    std::int64_t form(const ExpVec& g, const ExpVec& h) const;
    Rat half_form(const ExpVec& g, const ExpVec& h) const { return Rat(form(g, h), 2); }

    QLaurent mul(const QLaurent& a, const QLaurent& b) const;
    QLaurent pow(const QLaurent& a, std::int64_t k) const;
    // x^g * z without expanding g as an element.
    QLaurent mono_mul(const ExpVec& g, const QLaurent& z) const;
    QLaurent mul_mono(const QLaurent& z, const ExpVec& g) const;
    // Inverse of c q^a x^g with c = ±1.
    QLaurent inverse_monomial(const QLaurent& m) const;
    // Q with a * Q = n; throws ConsistencyError when inexact.
    QLaurent left_divide(const QLaurent& a, const QLaurent& n) const;
    // a*b == q^{form(deg a, deg b)} b*a as an exact check.
    bool q_commute(const QLaurent& a, const QLaurent& b, Rat* exponent = nullptr) const;

    std::size_t max_terms = 2'000'000;

  private:
    IntMatrix L_;
    void check_budget(std::size_t n) const;
};

// Dominance order h ⪯ g iff h = g + B n with n in N^{I_uf}.
class DominanceOrder {
  public:
    explicit DominanceOrder(const IntMatrix& Btilde);

    std::size_t dim() const { return B_.rows(); }
    const IntMatrix& matrix() const { return B_; }
    // Integral n with B n = diff, if any.
    std::optional<std::vector<std::int64_t>> solve(const ExpVec& diff) const;
    std::optional<std::vector<std::int64_t>> leq(const ExpVec& h, const ExpVec& g) const;
    bool less(const ExpVec& h, const ExpVec& g) const { return h != g && leq(h, g).has_value(); }
    // A functional strictly decreasing along the order: w with B^T w = (-1,...,-1).
    Rat weight(const ExpVec& e) const;

  private:
    IntMatrix B_;
    std::vector<std::size_t> rows_;
    RatMatrix inv_;  // inverse of B restricted to rows_
    std::vector<Rat> w_;
};

struct PointedElement {
    QLaurent value;
    ExpVec degree;
    bool normalized = false;
};

std::optional<ExpVec> degree(const QLaurent& z, const DominanceOrder& dom);
std::optional<ExpVec> codegree(const QLaurent& z, const DominanceOrder& dom);
std::optional<PointedElement> pointed(const QLaurent& z, const DominanceOrder& dom);
// Divides by the leading q-power; throws MathError when the leading coefficient is not +q^gamma.
PointedElement normalize(const QLaurent& z, const DominanceOrder& dom);
std::vector<std::size_t> support(const QLaurent& z, const DominanceOrder& dom);
std::vector<std::int64_t> supp_dim(const QLaurent& z, const DominanceOrder& dom);

// Some ⪯-maximal exponent of z (largest weight, ties broken lexicographically).
ExpVec a_maximal_exponent(const QLaurent& z, const DominanceOrder& dom);

}  // namespace qcluster
