#include "knotconc/surgery.hpp"

#include <sstream>

namespace knotconc {

namespace {

Integer parse_integer(const std::string& tok, const std::string& name, std::size_t line) {
  std::size_t k = tok.size() > 1 && (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  bool ok = k < tok.size();
  for (; k < tok.size(); ++k) ok = ok && tok[k] >= '0' && tok[k] <= '9';
  if (!ok)
    throw ParseError("presentation '" + name + "' line " + std::to_string(line) + ": expected an integer, got '" +
                     tok + "'");
  return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

Integer strip_primes_of(Integer d, const Integer& p) {
  for (Integer g = gcd(d, p); g > 1; g = gcd(d, g)) d /= g;
  return d;
}

IntVector zeros(int n) { return IntVector::Constant(n, Integer(0)); }

}  // namespace

const IntVector& SurgeryPresentation::tracked(const std::string& cls) const {
  for (const auto& [n, v] : classes)
    if (n == cls) return v;
  throw ValidationError("presentation '" + name + "' tracks no class '" + cls + "'");
}

void SurgeryPresentation::validate() const {
  if (linking.rows() != linking.cols())
    throw ValidationError("presentation '" + name + "': linking matrix is not square");
  for (Eigen::Index i = 0; i < linking.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (linking(i, j) != linking(j, i))
        throw ValidationError("presentation '" + name + "': linking matrix is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
  if (!components.empty() && components.size() != size())
    throw ValidationError("presentation '" + name + "': " + std::to_string(components.size()) +
                          " component labels for " + std::to_string(size()) + " rows");
  for (const auto& [n, v] : classes)
    if (static_cast<std::size_t>(v.size()) != size())
      throw ValidationError("presentation '" + name + "': class '" + n + "' has length " +
                            std::to_string(v.size()) + ", expected " + std::to_string(size()));
}

SurgeryPresentation parse_presentation(std::string_view text, const std::string& name) {
  SurgeryPresentation s;
  s.name = name;
  std::vector<std::vector<Integer>> rows;
  std::vector<std::pair<std::string, std::vector<Integer>>> classes;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("presentation '" + s.name + "' line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "note") {
      std::string rest;
      std::getline(ls, rest);
      const auto b = rest.find_first_not_of(' ');
      s.note = b == std::string::npos ? "" : rest.substr(b);
      continue;
    }
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (key == "name") {
      if (tok.size() != 1) fail("expected 'name <identifier>'");
      s.name = tok[0];
    } else if (key == "components") {
      if (tok.empty()) fail("expected component labels");
      s.components = tok;
    } else if (key == "row") {
      std::vector<Integer> r;
      for (const auto& t : tok) r.push_back(parse_integer(t, s.name, lineno));
      if (!rows.empty() && r.size() != rows.front().size()) fail("row length differs from the first row");
      rows.push_back(std::move(r));
    } else if (key == "class") {
      if (tok.size() < 2) fail("expected 'class <name> <entries>'");
      std::vector<Integer> v;
      for (std::size_t k = 1; k < tok.size(); ++k) v.push_back(parse_integer(tok[k], s.name, lineno));
      classes.emplace_back(tok[0], std::move(v));
    } else {
      fail("unknown record '" + key + "'");
    }
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  s.linking = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw ValidationError("presentation '" + s.name + "': linking matrix is not square");
    for (Eigen::Index j = 0; j < n; ++j) s.linking(i, j) = rows[i][j];
  }
  for (auto& [cn, v] : classes) {
    IntVector x(static_cast<Eigen::Index>(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k) x(static_cast<Eigen::Index>(k)) = v[k];
    s.classes.emplace_back(cn, std::move(x));
  }
  s.validate();
  return s;
}

std::string format_presentation(const SurgeryPresentation& s) {
  std::ostringstream os;
  if (!s.name.empty()) os << "name " << s.name << "\n";
  if (!s.components.empty()) {
    os << "components";
    for (const auto& c : s.components) os << " " << c;
    os << "\n";
  }
  for (Eigen::Index i = 0; i < s.linking.rows(); ++i) {
    os << "row";
    for (Eigen::Index j = 0; j < s.linking.cols(); ++j) os << " " << s.linking(i, j);
    os << "\n";
  }
  for (const auto& [n, v] : s.classes) {
    os << "class " << n;
    for (Eigen::Index k = 0; k < v.size(); ++k) os << " " << v(k);
    os << "\n";
  }
  if (!s.note.empty()) os << "note " << s.note << "\n";
  return os.str();
}

const IntVector& AbelianGroupDescription::image(const std::string& cls) const {
  for (const auto& [n, v] : images)
    if (n == cls) return v;
  throw ValidationError("no tracked class '" + cls + "'");
}

IntVector AbelianGroupDescription::reduce(const IntVector& x) const {
  IntVector r = x;
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(rank + static_cast<int>(k));
    r(i) = mod_floor(r(i), torsion[k]);
  }
  return r;
}

bool AbelianGroupDescription::is_zero(const IntVector& x) const {
  const IntVector r = reduce(x);
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r(i) != 0) return false;
  return true;
}

bool AbelianGroupDescription::operator==(const AbelianGroupDescription& o) const {
  if (rank != o.rank || torsion != o.torsion || images.size() != o.images.size()) return false;
  for (std::size_t k = 0; k < images.size(); ++k)
    if (images[k].first != o.images[k].first || images[k].second.size() != o.images[k].second.size() ||
        images[k].second != o.images[k].second)
      return false;
  return true;
}

std::string AbelianGroupDescription::str() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  else if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) s += " + " + parts[k];
  return s;
}

std::string AbelianGroupDescription::element_str(const IntVector& x) const {
  const IntVector r = reduce(x);
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank; ++i) os << (i ? ", " : "") << r(i);
  if (!torsion.empty()) {
    os << (rank ? "; " : "");
    for (std::size_t k = 0; k < torsion.size(); ++k)
      os << (k ? ", " : "") << r(rank + static_cast<Eigen::Index>(k)) << " mod " << torsion[k];
  }
  os << ")";
  return os.str();
}

AbelianGroupDescription first_homology(const SurgeryPresentation& s) {
  s.validate();
  const auto n = static_cast<Eigen::Index>(s.size());
  const SmithDecomposition<Integer> snf = smith_normal_form<Integer>(s.linking);
  std::vector<Eigen::Index> free_idx, tors_idx;
  AbelianGroupDescription g;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Integer& d = snf.D(i, i);
    if (d == 0) free_idx.push_back(i);
    else if (d > 1) {
      tors_idx.push_back(i);
      g.torsion.push_back(d);
    }
  }
  g.rank = static_cast<int>(free_idx.size());
  for (const auto& [cn, v] : s.classes) {
    const IntVector y = snf.U * v;
    IntVector c(static_cast<Eigen::Index>(free_idx.size() + tors_idx.size()));
    Eigen::Index k = 0;
    for (auto i : free_idx) c(k++) = y(i);
    for (auto i : tors_idx) c(k++) = y(i);
    g.images.emplace_back(cn, g.reduce(c));
  }
  return g;
}

AbelianGroupDescription localize(const AbelianGroupDescription& g, const Integer& p) {
  if (p < 1) throw ValidationError("localize: p must be positive");
  AbelianGroupDescription r;
  r.rank = g.rank;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < g.torsion.size(); ++k) {
    const Integer d = strip_primes_of(g.torsion[k], p);
    if (d > 1) {
      keep.push_back(k);
      r.torsion.push_back(d);
    }
  }
  for (const auto& [cn, v] : g.images) {
    IntVector c(r.rank + static_cast<Eigen::Index>(keep.size()));
    for (int i = 0; i < r.rank; ++i) c(i) = v(i);
    for (std::size_t k = 0; k < keep.size(); ++k) c(r.rank + static_cast<Eigen::Index>(k)) = v(g.rank + keep[k]);
    r.images.emplace_back(cn, r.reduce(c));
  }
  return r;
}

MeridianCheck cobordism_meridian_check(const SurgeryPresentation& s, const std::string& mu0,
                                       const std::string& mu1, std::int64_t p) {
  if (p < 1) throw ValidationError("homology check: p must be positive");
  s.tracked(mu0);
  s.tracked(mu1);
  MeridianCheck mc;
  mc.mu0 = mu0;
  mc.mu1 = mu1;
  mc.p = p;
  mc.integral = first_homology(s);
  const std::string rel = mu0 + " - " + std::to_string(p) + "*" + mu1;
  const IntVector res = mc.integral.reduce(mc.integral.image(mu0) - Integer(p) * mc.integral.image(mu1));
  if (!mc.integral.is_zero(res))
    throw ClassMismatch("presentation '" + s.name + "': " + rel + " is nonzero in H1 = " + mc.integral.str(),
                        mc.integral.element_str(res));

  mc.localized = localize(mc.integral, Integer(p));
  mc.mu0_image = mc.localized.image(mu0);
  mc.mu1_image = mc.localized.image(mu1);
  const IntVector lres = mc.mu0_image - Integer(p) * mc.mu1_image;
  if (!mc.localized.is_zero(lres))
    throw ClassMismatch("presentation '" + s.name + "': " + rel + " is nonzero after inverting " + std::to_string(p),
                        mc.localized.element_str(lres));

  Integer content = 0;
  for (int i = 0; i < mc.localized.rank; ++i) content = gcd(content, mc.mu0_image(i));
  mc.spans_free_summand = content != 0 && strip_primes_of(abs(content), Integer(p)) == 1;

  std::ostringstream os;
  os << mu0 << " = " << p << "*" << mu1 << " in H1 = " << mc.integral.str() << "; after inverting " << p
     << ": H1 = " << mc.localized.str() << ", " << mu0 << " -> " << mc.localized.element_str(mc.mu0_image) << ", "
     << mu1 << " -> " << mc.localized.element_str(mc.mu1_image)
     << (mc.spans_free_summand ? ", generating a free summand" : "");
  mc.summary = os.str();
  return mc;
}

SurgeryPresentation winding_cobordism_model(std::int64_t p) {
  if (p < 1) throw ValidationError("cobordism model: p must be positive");
  SurgeryPresentation s;
  s.name = "winding-" + std::to_string(p) + "-cobordism-model";
  s.components = {"K", "Ptilde", "H"};
  s.linking = IntMatrix::Zero(3, 3);
  // H links K once (oriented so lk = -1) and P-tilde p times.
  s.linking(0, 2) = s.linking(2, 0) = -1;
  s.linking(1, 2) = s.linking(2, 1) = Integer(p);
  auto e = [](Eigen::Index i) {
    IntVector v = zeros(3);
    v(i) = 1;
    return v;
  };
  s.classes = {{"mu_K", e(0)}, {"mu_Ptilde", e(1)}, {"mu_PK", e(1)}};
  s.note = "model of the handle picture from its linking data only; all components 0-framed";
  return s;
}

}  // namespace knotconc
