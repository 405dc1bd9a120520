#include "phkit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace phkit {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

Complex complex_from_json(const Json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be [re, im]");
  return {number(j[0], what), number(j[1], what)};
}

void dump_into(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += flat && indent >= 0 ? ", " : ",";
        if (!flat) newline(depth + 1);
        dump_into(out, j[i], indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

PauliForm pauli_from_json(const Json& j) {
  if (!j.is_object()) bad("matrix input must be a JSON object");
  if (j.contains("entries")) {
    const Json& e = j["entries"];
    if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2 ||
        !e[1].is_array() || e[1].size() != 2)
      bad("entries must be a 2x2 array of [re, im] pairs");
    Complex2x2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(e[r][c], "entry");
    return decompose(m);
  }
  if (j.contains("pauli")) {
    const Json& p = j["pauli"];
    PauliForm out;
    if (p.contains("h0")) {
      const Complex h0 = complex_from_json(p["h0"], "h0");
      out.h0_re = h0.real();
      out.h0_im = h0.imag();
    }
    if (p.contains("hR")) out.hR = vec3_from_json(p["hR"]);
    if (p.contains("hI")) out.hI = vec3_from_json(p["hI"]);
    if (!out.is_finite()) bad("pauli coefficients must be finite");
    return out;
  }
  bad("matrix input needs \"entries\" or \"pauli\"");
}

HermitianMetric metric_from_json(const Json& j, const Tolerance& tol) {
  if (j.is_object() && j.contains("gR")) {
    const double d = j.contains("d") ? number(j["d"], "d") : 0.0;
    const Vec3 g = vec3_from_json(j["gR"]);
    if (!std::isfinite(d)) bad("d must be finite");
    return HermitianMetric::make(d, g, tol);
  }
  return from_matrix(compose(pauli_from_json(j)), tol);
}

Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) bad("expected a 3-vector");
  Vec3 v(number(j[0], "component"), number(j[1], "component"), number(j[2], "component"));
  if (!v.allFinite()) bad("vector must be finite");
  return v;
}

Mat3 mat3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) bad("expected a 3x3 matrix");
  Mat3 m;
  for (int r = 0; r < 3; ++r) m.row(r) = vec3_from_json(j[static_cast<std::size_t>(r)]).transpose();
  return m;
}

Json to_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json to_json(const Mat3& m) {
  Json out = Json::array();
  for (int r = 0; r < 3; ++r) out.push_back(to_json(Vec3(m.row(r).transpose())));
  return out;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const PauliForm& p) {
  return Json{{"h0", to_json(p.h0())}, {"hR", to_json(p.hR)}, {"hI", to_json(p.hI)}};
}

Json to_json(const HermitianMetric& g) {
  return Json{{"d", g.d}, {"gR", to_json(g.gR)}, {"cell", std::string(to_string(g.cell))},
              {"singular", g.singular}};
}

Json to_json(const QuadraticSurface& s) {
  return Json{{"index", s.index}, {"A", to_json(s.A)}, {"b", to_json(s.b)}, {"c", s.c}};
}

std::string dump(const Json& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  return out;
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::IoError ? 2 : 1; }

}  // namespace phkit
