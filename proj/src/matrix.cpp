#include "qcluster/matrix.hpp"

#include <sstream>

namespace qcluster {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            auto x = a(i, k);
            if (x == decltype(x)(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
        }
    return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product: dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& x = a(i, k);
            if (x == decltype(x)(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
    return c;
}

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

IntMatrix to_int(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw MathError("non-integral matrix entry " + to_string(m(i, j)));
            r(i, j) = m(i, j).numerator();
        }
    return r;
}

std::vector<std::int64_t> mat_vec(const IntMatrix& m, const std::vector<std::int64_t>& v) {
    if (m.cols() != v.size()) throw InputError("matrix-vector: dimension mismatch");
    std::vector<std::int64_t> r(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) && v[j]) r[i] = checked_add(r[i], checked_mul(m(i, j), v[j]));
    return r;
}

bool is_skew(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

Echelon rref(RatMatrix m) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == Rat(0)) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = Rat(1) / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == Rat(0)) continue;
            Rat f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const IntMatrix& m) { return rref(to_rat(m)).rank(); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) return std::nullopt;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rat(1);
    }
    auto e = rref(aug);
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<std::vector<std::size_t>> independent_rows(const IntMatrix& m) {
    // Pivot columns of the transpose are independent rows of m.
    auto e = rref(to_rat(m.transpose()));
    if (e.rank() != m.cols()) return std::nullopt;
    return e.pivots;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace qcluster
