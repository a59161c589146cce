#include <charconv>
#include <sstream>

#include "knotconc/legendrian.hpp"

namespace knotconc {

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& msg) {
  throw ParseError("front '" + name + "' line " + std::to_string(line) + ": " + msg);
}

long to_long(const std::string& tok, const std::string& name, std::size_t line) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(name, line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

FrontDiagram parse_front(std::string_view text, const std::string& name) {
  FrontDiagram d;
  d.name = name;
  bool have_orient = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "L" || key == "R" || key == "X") {
      if (tok.size() != 2) fail(name, lineno, "event needs exactly one height");
      const long h = to_long(tok[1], name, lineno);
      if (h < 0) fail(name, lineno, "height must be nonnegative");
      const FrontEventKind k = key == "L"   ? FrontEventKind::left_cusp
                               : key == "R" ? FrontEventKind::right_cusp
                                            : FrontEventKind::crossing;
      d.events.push_back({k, static_cast<int>(h)});
    } else if (key == "periodic") {
      if (tok.size() != 2) fail(name, lineno, "periodic needs a strand count");
      const long n = to_long(tok[1], name, lineno);
      if (n < 0) fail(name, lineno, "strand count must be nonnegative");
      d.periodic = static_cast<int>(n);
    } else if (key == "orient") {
      if (tok.size() != 3 || (tok[2] != "up" && tok[2] != "down"))
        fail(name, lineno, "expected 'orient <event-index> up|down'");
      const long e = to_long(tok[1], name, lineno);
      if (e < 0) fail(name, lineno, "event index must be nonnegative");
      d.orient_event = static_cast<std::size_t>(e);
      d.orient_up = tok[2] == "up";
      have_orient = true;
    } else {
      fail(name, lineno, "unknown record '" + key + "'");
    }
  }
  if (!have_orient) fail(name, lineno, "missing 'orient' marker");
  return d;
}

std::string format_front(const FrontDiagram& d) {
  std::ostringstream os;
  if (d.periodic) os << "periodic " << d.periodic << "\n";
  os << "orient " << d.orient_event << (d.orient_up ? " up" : " down") << "\n";
  for (const auto& e : d.events) {
    const char c = e.kind == FrontEventKind::left_cusp ? 'L' : e.kind == FrontEventKind::right_cusp ? 'R' : 'X';
    os << c << " " << e.height << "\n";
  }
  return os.str();
}

}  // namespace knotconc
