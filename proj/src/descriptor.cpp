#include "qh/descriptor.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qh {

namespace {

[[noreturn]] void fail(int line, const std::string& why) {
  throw std::invalid_argument("descriptor parse error at line " + std::to_string(line) + ": " + why);
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Integer combination of L0, F1, F2; `*` optional. Returns coords (L0,F1,F2)
// truncated to `rank`.
std::vector<int> parse_class_expr(const std::string& text, int rank, int line) {
  std::vector<int> coords(3, 0);
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < text.size() && (isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail(line, "expected '+' or '-' in class expression '" + text + "'");
    }
    first = false;
    skip();
    long mag = 1;
    if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      mag = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        mag = mag * 10 + (text[i++] - '0');
    }
    skip();
    std::size_t start = i;
    while (i < text.size() && (isalnum(static_cast<unsigned char>(text[i])))) ++i;
    std::string name = text.substr(start, i - start);
    int pos;
    if (name == "L0") pos = 0;
    else if (name == "F1") pos = 1;
    else if (name == "F2") pos = 2;
    else fail(line, "unknown lattice class '" + name + "'");
    if (pos >= rank) fail(line, "class '" + name + "' exceeds the lattice rank");
    coords[pos] += sign * static_cast<int>(mag);
  }
  coords.resize(rank);
  return coords;
}

}  // namespace

ThreefoldDescriptor parse_descriptor(const std::string& text) {
  ThreefoldDescriptor d;
  bool saw_name = false, saw_ambient = false;
  std::vector<std::pair<int, std::string>> basis_lines;  // parsed after curves
  std::vector<std::pair<int, std::string>> geom_lines;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (s.empty()) continue;
    auto colon = s.find(':');
    if (colon == std::string::npos) fail(line, "expected 'key: value'");
    std::string key = strip(s.substr(0, colon));
    std::string val = strip(s.substr(colon + 1));
    if (key == "name") {
      if (saw_name) fail(line, "duplicate name");
      if (val.empty()) fail(line, "empty name");
      d.name = val;
      saw_name = true;
    } else if (key == "ambient") {
      if (saw_ambient) fail(line, "duplicate ambient");
      if (val == "P3") d.ambient = Ambient::P3;
      else if (val == "Q3") d.ambient = Ambient::Q3;
      else fail(line, "ambient must be P3 or Q3");
      saw_ambient = true;
    } else if (key == "curve") {
      std::istringstream cs(val);
      int idx = 0;
      std::string deg;
      if (!(cs >> idx >> deg)) fail(line, "curve line needs '<j> degree=<d>'");
      if (deg.rfind("degree=", 0) != 0) fail(line, "curve line needs 'degree=<d>'");
      CurveSpec c;
      c.index = idx;
      try {
        c.degree = std::stoi(deg.substr(7));
      } catch (...) {
        fail(line, "bad curve degree");
      }
      std::string extra;
      if (cs >> extra) fail(line, "unexpected token '" + extra + "' on curve line");
      if (idx != static_cast<int>(d.curves.size()) + 1)
        fail(line, "curves must be numbered 1,2 in order");
      d.curves.push_back(c);
    } else if (key == "basis") {
      basis_lines.emplace_back(line, val);
    } else if (key == "geom") {
      geom_lines.emplace_back(line, val);
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  if (!saw_name) fail(line, "missing name");
  if (!saw_ambient) fail(line, "missing ambient");
  if (d.curves.empty() || d.curves.size() > 2) fail(line, "need one or two curve lines");

  const int rank = d.b2();
  d.effective_basis.assign(rank, {});
  std::vector<bool> seen(rank, false);
  for (auto& [ln, val] : basis_lines) {
    auto eq = val.find('=');
    if (eq == std::string::npos) fail(ln, "basis line needs 'q<i> = <class expr>'");
    std::string qname = strip(val.substr(0, eq));
    if (qname.size() < 2 || qname[0] != 'q') fail(ln, "basis key must be q0, q1, ...");
    int qi;
    try {
      qi = std::stoi(qname.substr(1));
    } catch (...) {
      fail(ln, "bad basis key '" + qname + "'");
    }
    if (qi < 0 || qi >= rank) fail(ln, "basis index out of range for rank " + std::to_string(rank));
    if (seen[qi]) fail(ln, "duplicate basis entry " + qname);
    seen[qi] = true;
    d.effective_basis[qi] = parse_class_expr(val.substr(eq + 1), rank, ln);
  }
  for (int i = 0; i < rank; ++i)
    if (!seen[i]) fail(line, "missing basis entry q" + std::to_string(i));

  for (auto& [ln, val] : geom_lines) {
    // I(<class> | <insertions>) = <value>
    auto open = val.find('I');
    auto paren = val.find('(', open);
    auto bar = val.find('|', paren);
    auto close = val.find(')', bar);
    auto eq = val.find('=', close);
    if (open == std::string::npos || paren == std::string::npos || bar == std::string::npos ||
        close == std::string::npos || eq == std::string::npos)
      fail(ln, "geom line needs 'I(<class> | <insertions>) = <value>'");
    RawGeomRelation rel;
    rel.geo_class = parse_class_expr(val.substr(paren + 1, bar - paren - 1), rank, ln);
    std::string ins = val.substr(bar + 1, close - bar - 1);
    std::istringstream is(ins);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      tok = strip(tok);
      if (tok.empty()) fail(ln, "empty insertion");
      if (tok != "pt" && tok != "rho" && tok != "phi1" && tok != "phi2")
        fail(ln, "insertion must be one of pt, rho, phi1, phi2");
      rel.insertions.push_back(tok);
    }
    if (rel.insertions.empty()) fail(ln, "geom line needs at least one insertion");
    try {
      rel.value = Rational::parse(val.substr(eq + 1));
    } catch (...) {
      fail(ln, "bad rational value");
    }
    d.geometric_relations.push_back(std::move(rel));
  }
  // Structural validation (curve count, unimodularity, anticanonical degrees).
  build_blowup_ring(d);
  return d;
}

std::string render_descriptor(const ThreefoldDescriptor& d) {
  std::ostringstream os;
  os << "name: " << d.name << "\n";
  os << "ambient: " << ambient_name(d.ambient) << "\n";
  for (const auto& c : d.curves) os << "curve: " << c.index << " degree=" << c.degree << "\n";
  auto class_str = [&](const std::vector<int>& geo) {
    static const char* names[] = {"L0", "F1", "F2"};
    std::string s;
    for (std::size_t g = 0; g < geo.size(); ++g) {
      if (geo[g] == 0) continue;
      if (!s.empty()) s += geo[g] > 0 ? " + " : " - ";
      else if (geo[g] < 0) s += "-";
      int a = std::abs(geo[g]);
      if (a != 1) s += std::to_string(a) + "*";
      s += names[g];
    }
    return s.empty() ? std::string("0") : s;
  };
  for (std::size_t i = 0; i < d.effective_basis.size(); ++i)
    os << "basis: q" << i << " = " << class_str(d.effective_basis[i]) << "\n";
  for (const auto& g : d.geometric_relations) {
    os << "geom: I(" << class_str(g.geo_class) << " | ";
    for (std::size_t i = 0; i < g.insertions.size(); ++i)
      os << (i ? ", " : "") << g.insertions[i];
    os << ") = " << g.value.str() << "\n";
  }
  return os.str();
}

ExpectedData parse_expected(const std::string& text) {
  ExpectedData e;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (s.empty()) continue;
    if (s.rfind("relation:", 0) == 0) {
      e.relations.push_back(strip(s.substr(9)));
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value' or 'relation: ...'");
    std::string key = strip(s.substr(0, eq));
    std::string val = strip(s.substr(eq + 1));
    try {
      if (key == "N") e.essential_count = std::stol(val);
      else if (key == "dimA") e.dim_a = std::stoi(val);
      else if (key == "degA") e.deg_a = std::stol(val);
      else fail(line, "unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      fail(line, "bad integer value");
    }
  }
  return e;
}

LoadedPresentation parse_presentation(const std::string& text) {
  LoadedPresentation lp;
  lp.ring = std::make_unique<PolyRing>();
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false;
  std::vector<std::pair<int, std::string>> relations;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (s.empty()) continue;
    if (!header) {
      if (s != "presentation") fail(line, "presentation file must start with 'presentation'");
      header = true;
      continue;
    }
    auto colon = s.find(':');
    if (colon == std::string::npos) fail(line, "expected 'key: value'");
    std::string key = strip(s.substr(0, colon));
    std::string val = strip(s.substr(colon + 1));
    if (key == "relation") {
      relations.emplace_back(line, val);
      continue;
    }
    auto wpos = val.find("weight=");
    if (wpos == std::string::npos) fail(line, key + " line needs 'weight=<w>'");
    std::string name = strip(val.substr(0, wpos));
    long w;
    try {
      w = std::stol(val.substr(wpos + 7));
    } catch (...) {
      fail(line, "bad weight");
    }
    if (key == "generator") lp.input.gen_vars.push_back(lp.ring->add_var(name, w));
    else if (key == "qvar") lp.input.q_vars.push_back(lp.ring->add_var(name, w));
    else fail(line, "unknown key '" + key + "'");
  }
  if (!header) fail(line, "empty presentation file");
  lp.input.ring = lp.ring.get();
  for (auto& [ln, rel] : relations) {
    try {
      lp.input.relations.push_back(Polynomial::parse(lp.ring.get(), rel));
    } catch (const std::exception& ex) {
      fail(ln, ex.what());
    }
  }
  return lp;
}

bool looks_like_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (s.empty()) continue;
    return s == "presentation";
  }
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

ThreefoldDescriptor load_descriptor(const std::string& path) {
  return parse_descriptor(read_file(path));
}

ExpectedData load_expected(const std::string& path) { return parse_expected(read_file(path)); }

LoadedPresentation load_presentation(const std::string& path) {
  return parse_presentation(read_file(path));
}

}  // namespace qh
