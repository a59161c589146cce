#include "knotconc/seifert.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace knotconc {

RootOfUnity::RootOfUnity(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw ValidationError("root of unity: denominator must be positive");
  a %= b;
  if (a < 0) a += b;
  const std::int64_t g = std::gcd(a, b);
  a_ = a / g;
  b_ = b / g;
}

RootOfUnity RootOfUnity::parse(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw ParseError("root of unity '" + text + "': expected a/b with integers a, b");
    return v;
  };
  const std::string_view sv(text);
  if (slash == std::string::npos) return {parse_int(sv), 1};
  return {parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1))};
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  const auto a = static_cast<__int128>(a_) * k % b_;
  return {static_cast<std::int64_t>(a), b_};
}

std::string RootOfUnity::str() const { return std::to_string(a_) + "/" + std::to_string(b_); }

SeifertMatrix::SeifertMatrix(IntMatrix v, std::string name) : v_(std::move(v)), name_(std::move(name)) {
  if (v_.rows() != v_.cols()) throw ValidationError("Seifert matrix must be square");
  const IntMatrix skew = v_ - v_.transpose();
  const Integer d = bareiss_determinant<Integer>(skew);
  if (abs(d) != 1)
    throw ValidationError("Seifert matrix condition |det(V - V^T)| = 1 fails (det = " + d.str() + ")" +
                          (name_.empty() ? std::string() : " for " + name_));
}

IntMatrix parse_int_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) throw ValidationError("matrix rows must have equal length n");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntLaurent alexander(const SeifertMatrix& V) {
  const IntMatrix& v = V.matrix();
  const Eigen::Index n = v.rows();
  Matrix<IntLaurent> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = IntLaurent(v(i, j)) - IntLaurent::monomial(v(j, i), 1);
  IntLaurent d = centered(bareiss_determinant<IntLaurent>(m));
  return d.leading() < 0 ? -d : d;
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const Eigen::Index n = a.size(), m = b.size();
  IntMatrix v = IntMatrix::Zero(n + m, n + m);
  v.topLeftCorner(n, n) = a.matrix();
  v.bottomRightCorner(m, m) = b.matrix();
  return SeifertMatrix(std::move(v), a.name() + " # " + b.name());
}

SeifertMatrix mirror(const SeifertMatrix& a) {
  return SeifertMatrix(IntMatrix(-a.matrix().transpose()), "mirror(" + a.name() + ")");
}

}  // namespace knotconc
