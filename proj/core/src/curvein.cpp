#include "gonalis/curvein.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace gonalis {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

CurveInput parse_curve_input(const std::string& text) {
  CurveInput in;
  std::istringstream ss(text);
  std::string line;
  int lineno = 0;
  bool in_ideal = false;
  bool have_field = false;
  bool have_kind = false;
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("input line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(ss, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (in_ideal) {
      in.ideal_gens.push_back(s);
      continue;
    }
    std::istringstream ls(s);
    std::string tok;
    ls >> tok;
    if (tok == "field") {
      std::string kind;
      ls >> kind;
      if (kind == "QQ") {
        in.field.rational = true;
      } else if (kind == "GF") {
        in.field.rational = false;
        if (!(ls >> in.field.p) || in.field.p < 2) fail("GF needs a prime");
      } else {
        fail("field must be 'GF <p>' or 'QQ'");
      }
      have_field = true;
    } else if (tok == "plane") {
      if (have_kind) fail("curve kind already set");
      in.kind = InputKind::plane;
      if (!(ls >> in.plane_degree) || in.plane_degree < 3) fail("plane needs a degree >= 3");
      have_kind = true;
    } else if (tok == "F") {
      auto eq = s.find('=');
      if (eq == std::string::npos) fail("expected 'F = <polynomial>'");
      in.plane_poly = trim(s.substr(eq + 1));
      if (in.plane_poly.empty()) fail("empty polynomial");
    } else if (tok == "sing") {
      auto lp = s.find('(');
      auto rp = s.find(')');
      if (lp == std::string::npos || rp == std::string::npos || rp < lp)
        fail("expected 'sing (a:b:c) mult <nu>'");
      std::string inner = s.substr(lp + 1, rp - lp - 1);
      CurveInput::SingSpec sp;
      size_t c1 = inner.find(':');
      size_t c2 = inner.rfind(':');
      if (c1 == std::string::npos || c2 == c1) fail("point needs three ':'-separated coordinates");
      sp.coords[0] = trim(inner.substr(0, c1));
      sp.coords[1] = trim(inner.substr(c1 + 1, c2 - c1 - 1));
      sp.coords[2] = trim(inner.substr(c2 + 1));
      std::istringstream rest(s.substr(rp + 1));
      std::string mw;
      if (!(rest >> mw) || mw != "mult" || !(rest >> sp.mult) || sp.mult < 2)
        fail("expected 'mult <nu>' with nu >= 2");
      in.sings.push_back(sp);
    } else if (tok == "canonical") {
      if (have_kind) fail("curve kind already set");
      in.kind = InputKind::canonical;
      if (!(ls >> in.genus) || in.genus < 3) fail("canonical needs a genus >= 3");
      have_kind = true;
    } else if (tok == "ideal:") {
      if (in.kind != InputKind::canonical || !have_kind) fail("'ideal:' outside a canonical block");
      in_ideal = true;
    } else if (tok == "hyperelliptic") {
      if (have_kind) fail("curve kind already set");
      in.kind = InputKind::hyperelliptic;
      auto eq = s.find('=');
      if (eq == std::string::npos) fail("expected 'hyperelliptic f(x) = <polynomial>'");
      in.hyperell_rhs = trim(s.substr(eq + 1));
      if (in.hyperell_rhs.empty()) fail("empty polynomial");
      have_kind = true;
    } else {
      fail("unrecognized directive '" + tok + "'");
    }
  }
  lineno = 0;  // end-of-input diagnostics
  if (!have_field) fail("missing 'field' line");
  if (!have_kind) fail("missing curve description");
  if (in.kind == InputKind::plane && in.plane_poly.empty()) fail("missing 'F = <polynomial>'");
  if (in.kind == InputKind::canonical && in.ideal_gens.empty()) fail("canonical block has no generators");
  return in;
}

}  // namespace gonalis
