#include "nijlie/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nijlie {

namespace {

Rational rat_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected rational string, got: " + j.dump());
}

json rat_to_json(const Rational& r) { return rat_str(r); }

// "1,2,5" -> {0, 1, 4}
std::vector<int> parse_key(const std::string& key, int dim) {
  std::vector<int> out;
  if (key.empty()) return out;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = std::stoi(tok);
    if (v < 1 || v > dim) throw std::invalid_argument("basis index out of range: " + key);
    out.push_back(v - 1);
  }
  return out;
}

std::string make_key(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);
  }
  return s;
}

Vec vec_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument("expected array of length " + std::to_string(n));
  Vec v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = rat_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

std::vector<Matrix> matrix_list_from_json(const json& j, int count, int rows, int cols,
                                          const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != count)
    throw std::invalid_argument(what + ": expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (const auto& mj : j) {
    Matrix m = matrix_from_json(mj);
    if (m.rows != rows || m.cols != cols)
      throw std::invalid_argument(what + ": matrix has wrong shape");
    out.push_back(std::move(m));
  }
  return out;
}

json matrix_list_to_json(const std::vector<Matrix>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

}  // namespace

json to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols; ++k) row.push_back(rat_to_json(m.at(i, k)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

Matrix matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("operator: expected rows/cols/entries");
  int r = j["rows"].get<int>(), c = j["cols"].get<int>();
  if (r < 0 || c < 0) throw std::invalid_argument("operator: negative dimensions");
  Matrix m(r, c);
  const json& e = j["entries"];
  if (!e.is_array() || static_cast<int>(e.size()) != r)
    throw std::invalid_argument("operator: entries must have `rows` rows");
  for (int i = 0; i < r; ++i) {
    Vec row = vec_from_json(e[static_cast<std::size_t>(i)], c);
    for (int k = 0; k < c; ++k) m.at(i, k) = row[static_cast<std::size_t>(k)];
  }
  return m;
}

json to_json(const LieAlgebra& L) {
  json j;
  j["dim"] = L.dim;
  json br = json::object();
  for (int i = 0; i < L.dim; ++i)
    for (int k = i + 1; k < L.dim; ++k) {
      const Vec& v = L.structure(i, k);
      if (is_zero(v)) continue;
      json entry = json::object();
      for (int t = 0; t < L.dim; ++t)
        if (sgn(v[t]) != 0) entry[std::to_string(t + 1)] = rat_to_json(v[t]);
      br[make_key({i, k})] = entry;
    }
  j["bracket"] = br;
  if (!L.labels.empty()) j["labels"] = L.labels;
  return j;
}

LieAlgebra lie_from_json(const json& j) {
  if (!j.contains("dim")) throw std::invalid_argument("algebra: missing dim");
  int d = j["dim"].get<int>();
  if (d < 0) throw std::invalid_argument("algebra: negative dim");
  LieAlgebra L(d);
  if (j.contains("bracket")) {
    for (const auto& [key, entry] : j["bracket"].items()) {
      std::vector<int> idx = parse_key(key, d);
      if (idx.size() != 2 || idx[0] >= idx[1])
        throw std::invalid_argument("algebra: bracket keys must be \"i,j\" with i < j");
      Vec v = zero_vec(d);
      for (const auto& [tk, val] : entry.items()) {
        int t = std::stoi(tk);
        if (t < 1 || t > d) throw std::invalid_argument("algebra: target index out of range");
        v[static_cast<std::size_t>(t - 1)] = rat_from_json(val);
      }
      L.set_bracket(idx[0], idx[1], v);
    }
  }
  if (j.contains("labels")) L.labels = j["labels"].get<std::vector<std::string>>();
  return L;
}

json to_json(const Representation& rep, const LieAlgebra&) {
  json j;
  j["dimV"] = rep.dimV;
  j["rho"] = matrix_list_to_json(rep.rho);
  return j;
}

Representation rep_from_json(const json& j, const LieAlgebra& base) {
  if (!j.contains("dimV") || !j.contains("rho"))
    throw std::invalid_argument("representation: expected dimV and rho");
  Representation rep;
  rep.base = base;
  rep.dimV = j["dimV"].get<int>();
  rep.rho = matrix_list_from_json(j["rho"], base.dim, rep.dimV, rep.dimV, "rho");
  return rep;
}

json to_json(const AltMap& f) {
  json j;
  j["arity"] = f.arity;
  j["dim"] = f.dim;
  j["targetDim"] = f.target_dim;
  json coeffs = json::object();
  for (int c = 0; c < f.combo_count(); ++c) {
    Vec v = f.coeff(c);
    if (is_zero(v)) continue;
    coeffs[make_key(combo_unrank(c, f.arity, f.dim))] = vec_to_json(v);
  }
  j["coeffs"] = coeffs;
  return j;
}

AltMap altmap_from_json(const json& j) {
  for (const char* k : {"arity", "dim", "targetDim"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("altmap: missing ") + k);
  AltMap f(j["arity"].get<int>(), j["dim"].get<int>(), j["targetDim"].get<int>());
  if (j.contains("coeffs")) {
    for (const auto& [key, val] : j["coeffs"].items()) {
      std::vector<int> idx = parse_key(key, f.dim);
      if (static_cast<int>(idx.size()) != f.arity)
        throw std::invalid_argument("altmap: key arity mismatch: " + key);
      for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] >= idx[i])
          throw std::invalid_argument("altmap: keys must be strictly increasing: " + key);
      f.set_coeff(idx, vec_from_json(val, f.target_dim));
    }
  }
  return f;
}

json to_json(const Cobracket& co) {
  json j;
  j["dim"] = co.dim;
  json delta = json::object();
  for (int i = 0; i < co.dim; ++i) {
    const Tensor2& t = co.delta[static_cast<std::size_t>(i)];
    json entry = json::object();
    for (int a = 0; a < co.dim; ++a)
      for (int b = a + 1; b < co.dim; ++b)
        if (sgn(t.at(a, b)) != 0) entry[make_key({a, b})] = rat_to_json(t.at(a, b));
    if (!entry.empty()) delta[std::to_string(i + 1)] = entry;
  }
  j["delta"] = delta;
  return j;
}

Cobracket cobracket_from_json(const json& j) {
  if (!j.contains("dim")) throw std::invalid_argument("cobracket: missing dim");
  int d = j["dim"].get<int>();
  Cobracket co(d);
  if (j.contains("delta")) {
    for (const auto& [ik, entry] : j["delta"].items()) {
      int i = std::stoi(ik);
      if (i < 1 || i > d) throw std::invalid_argument("cobracket: index out of range");
      for (const auto& [key, val] : entry.items()) {
        std::vector<int> idx = parse_key(key, d);
        if (idx.size() != 2 || idx[0] >= idx[1])
          throw std::invalid_argument("cobracket: keys must be \"j,k\" with j < k");
        Rational r = rat_from_json(val);
        co.delta[static_cast<std::size_t>(i - 1)].at(idx[0], idx[1]) = r;
        co.delta[static_cast<std::size_t>(i - 1)].at(idx[1], idx[0]) = -r;
      }
    }
  }
  return co;
}

json to_json(const ConeCochain& c) {
  json j;
  j["degree"] = c.degree();
  j["chi"] = to_json(c.chi);
  j["F"] = c.F ? to_json(*c.F) : json();
  return j;
}

ConeCochain cone_cochain_from_json(const json& j) {
  for (const char* k : {"degree", "chi"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("cone cochain: missing ") + k);
  ConeCochain c;
  c.chi = altmap_from_json(j["chi"]);
  int degree = j["degree"].get<int>();
  if (c.chi.arity != degree)
    throw std::invalid_argument("cone cochain: chi arity must equal the degree");
  if (j.contains("F") && !j["F"].is_null()) {
    c.F = altmap_from_json(j["F"]);
    if (c.F->arity != degree - 1 || c.F->dim != c.chi.dim || c.F->target_dim != c.chi.target_dim)
      throw std::invalid_argument("cone cochain: F has the wrong shape");
  }
  if (degree >= 2 && !c.F) throw std::invalid_argument("cone cochain: degree >= 2 requires F");
  return c;
}

json to_json(const Tensor2& r) {
  json j;
  j["dim"] = r.dim;
  json rows = json::array();
  for (int i = 0; i < r.dim; ++i) {
    json row = json::array();
    for (int k = 0; k < r.dim; ++k) row.push_back(rat_to_json(r.at(i, k)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

Tensor2 tensor2_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("tensor: expected dim and entries");
  int d = j["dim"].get<int>();
  Tensor2 r(d);
  const json& e = j["entries"];
  if (!e.is_array() || static_cast<int>(e.size()) != d)
    throw std::invalid_argument("tensor: entries must be a dim x dim grid");
  for (int i = 0; i < d; ++i) {
    Vec row = vec_from_json(e[static_cast<std::size_t>(i)], d);
    for (int k = 0; k < d; ++k) r.at(i, k) = row[static_cast<std::size_t>(k)];
  }
  return r;
}

json to_json(const NSLie& P) {
  json j;
  j["dim"] = P.dim;
  json dia = json::object();
  for (int i = 0; i < P.dim; ++i)
    for (int k = 0; k < P.dim; ++k) {
      const Vec& v = P.dia(i, k);
      if (is_zero(v)) continue;
      json entry = json::object();
      for (int t = 0; t < P.dim; ++t)
        if (sgn(v[t]) != 0) entry[std::to_string(t + 1)] = rat_to_json(v[t]);
      dia[make_key({i, k})] = entry;
    }
  j["diamond"] = dia;
  json flo = json::object();
  for (int i = 0; i < P.dim; ++i)
    for (int k = i + 1; k < P.dim; ++k) {
      Vec v = P.floor.eval_indices({i, k});
      if (is_zero(v)) continue;
      json entry = json::object();
      for (int t = 0; t < P.dim; ++t)
        if (sgn(v[t]) != 0) entry[std::to_string(t + 1)] = rat_to_json(v[t]);
      flo[make_key({i, k})] = entry;
    }
  j["floor"] = flo;
  return j;
}

NSLie nslie_from_json(const json& j) {
  if (!j.contains("dim")) throw std::invalid_argument("nslie: missing dim");
  int d = j["dim"].get<int>();
  NSLie P(d);
  auto read_entry = [&](const json& entry) {
    Vec v = zero_vec(d);
    for (const auto& [tk, val] : entry.items()) {
      int t = std::stoi(tk);
      if (t < 1 || t > d) throw std::invalid_argument("nslie: target index out of range");
      v[static_cast<std::size_t>(t - 1)] = rat_from_json(val);
    }
    return v;
  };
  if (j.contains("diamond"))
    for (const auto& [key, entry] : j["diamond"].items()) {
      std::vector<int> idx = parse_key(key, d);
      if (idx.size() != 2) throw std::invalid_argument("nslie: diamond keys must be pairs");
      P.set_dia(idx[0], idx[1], read_entry(entry));
    }
  if (j.contains("floor"))
    for (const auto& [key, entry] : j["floor"].items()) {
      std::vector<int> idx = parse_key(key, d);
      if (idx.size() != 2 || idx[0] >= idx[1])
        throw std::invalid_argument("nslie: floor keys must be \"i,j\" with i < j");
      P.floor.set_coeff(idx, read_entry(entry));
    }
  return P;
}

json to_json(const NSRep& R) {
  json j;
  j["dimV"] = R.dimV;
  j["l"] = matrix_list_to_json(R.l);
  j["r"] = matrix_list_to_json(R.r);
  j["psi"] = matrix_list_to_json(R.psi);
  return j;
}

NSRep nsrep_from_json(const json& j) {
  for (const char* k : {"dimV", "l", "r", "psi"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("ns-rep: missing ") + k);
  NSRep R;
  R.dimV = j["dimV"].get<int>();
  int count = static_cast<int>(j["l"].size());
  R.l = matrix_list_from_json(j["l"], count, R.dimV, R.dimV, "l");
  R.r = matrix_list_from_json(j["r"], count, R.dimV, R.dimV, "r");
  R.psi = matrix_list_from_json(j["psi"], count, R.dimV, R.dimV, "psi");
  return R;
}

json to_json(const TwoTermL& T) {
  json j;
  j["dimL0"] = T.dim0;
  j["dimL1"] = T.dim1;
  j["d"] = to_json(T.d);
  j["l2_00"] = to_json(T.l2_00);
  j["l2_01"] = matrix_list_to_json(T.l2_01);
  j["l3"] = to_json(T.l3);
  return j;
}

TwoTermL two_term_from_json(const json& j) {
  for (const char* k : {"dimL0", "dimL1", "d", "l2_00", "l2_01", "l3"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("2term: missing ") + k);
  TwoTermL T;
  T.dim0 = j["dimL0"].get<int>();
  T.dim1 = j["dimL1"].get<int>();
  T.d = matrix_from_json(j["d"]);
  if (T.d.rows != T.dim0 || T.d.cols != T.dim1)
    throw std::invalid_argument("2term: d must map L1 to L0");
  T.l2_00 = altmap_from_json(j["l2_00"]);
  if (T.l2_00.arity != 2 || T.l2_00.dim != T.dim0 || T.l2_00.target_dim != T.dim0)
    throw std::invalid_argument("2term: l2_00 has wrong shape");
  T.l2_01 = matrix_list_from_json(j["l2_01"], T.dim0, T.dim1, T.dim1, "l2_01");
  T.l3 = altmap_from_json(j["l3"]);
  if (T.l3.arity != 3 || T.l3.dim != T.dim0 || T.l3.target_dim != T.dim1)
    throw std::invalid_argument("2term: l3 has wrong shape");
  return T;
}

json to_json(const HomotopyNijenhuis& HN) {
  json j;
  j["N0"] = to_json(HN.N0);
  j["N1"] = to_json(HN.N1);
  j["N2"] = to_json(HN.N2);
  return j;
}

HomotopyNijenhuis homotopy_nijenhuis_from_json(const json& j, const TwoTermL& T) {
  for (const char* k : {"N0", "N1", "N2"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("homotopy-nijenhuis: missing ") + k);
  HomotopyNijenhuis HN;
  HN.N0 = matrix_from_json(j["N0"]);
  HN.N1 = matrix_from_json(j["N1"]);
  HN.N2 = altmap_from_json(j["N2"]);
  if (HN.N0.rows != T.dim0 || HN.N0.cols != T.dim0 || HN.N1.rows != T.dim1 ||
      HN.N1.cols != T.dim1 || HN.N2.arity != 2 || HN.N2.dim != T.dim0 ||
      HN.N2.target_dim != T.dim1)
    throw std::invalid_argument("homotopy-nijenhuis: shape mismatch with the 2-term data");
  return HN;
}

json to_json(const TwoTermRep& R, const TwoTermL& T) {
  json j;
  j["dimV0"] = R.dimV0;
  j["dimV1"] = R.dimV1;
  j["dbar"] = to_json(R.dbar);
  j["m2_00"] = matrix_list_to_json(R.m2_00);
  j["m2_01"] = matrix_list_to_json(R.m2_01);
  j["m2_10"] = matrix_list_to_json(R.m2_10);
  json m3 = json::object();
  for (int i = 0; i < T.dim0; ++i)
    for (int k = i + 1; k < T.dim0; ++k) {
      const Matrix& m = R.m3[static_cast<std::size_t>(combo_rank({i, k}, T.dim0))];
      if (!m.is_zero()) m3[make_key({i, k})] = to_json(m);
    }
  j["m3"] = m3;
  return j;
}

TwoTermRep two_term_rep_from_json(const json& j, const TwoTermL& T) {
  for (const char* k : {"dimV0", "dimV1", "dbar", "m2_00", "m2_01", "m2_10"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("2term-rep: missing ") + k);
  TwoTermRep R;
  R.dimV0 = j["dimV0"].get<int>();
  R.dimV1 = j["dimV1"].get<int>();
  R.dbar = matrix_from_json(j["dbar"]);
  if (R.dbar.rows != R.dimV0 || R.dbar.cols != R.dimV1)
    throw std::invalid_argument("2term-rep: dbar must map V1 to V0");
  R.m2_00 = matrix_list_from_json(j["m2_00"], T.dim0, R.dimV0, R.dimV0, "m2_00");
  R.m2_01 = matrix_list_from_json(j["m2_01"], T.dim0, R.dimV1, R.dimV1, "m2_01");
  R.m2_10 = matrix_list_from_json(j["m2_10"], T.dim1, R.dimV1, R.dimV0, "m2_10");
  R.m3.assign(static_cast<std::size_t>(binom(T.dim0, 2)), Matrix(R.dimV1, R.dimV0));
  if (j.contains("m3"))
    for (const auto& [key, val] : j["m3"].items()) {
      std::vector<int> idx = parse_key(key, T.dim0);
      if (idx.size() != 2 || idx[0] >= idx[1])
        throw std::invalid_argument("2term-rep: m3 keys must be \"i,j\" with i < j");
      Matrix m = matrix_from_json(val);
      if (m.rows != R.dimV1 || m.cols != R.dimV0)
        throw std::invalid_argument("2term-rep: m3 matrix has wrong shape");
      R.m3[static_cast<std::size_t>(combo_rank(idx, T.dim0))] = std::move(m);
    }
  return R;
}

json to_json(const MatchedPairData& mp) {
  json j;
  j["g"] = to_json(mp.g);
  j["h"] = to_json(mp.h);
  j["rho"] = matrix_list_to_json(mp.rho);
  j["nu"] = matrix_list_to_json(mp.nu);
  if (mp.N) j["N"] = to_json(*mp.N);
  if (mp.S) j["S"] = to_json(*mp.S);
  return j;
}

MatchedPairData matched_pair_from_json(const json& j) {
  for (const char* k : {"g", "h", "rho", "nu"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("matched-pair: missing ") + k);
  MatchedPairData mp;
  mp.g = lie_from_json(j["g"]);
  mp.h = lie_from_json(j["h"]);
  mp.rho = matrix_list_from_json(j["rho"], mp.g.dim, mp.h.dim, mp.h.dim, "rho");
  mp.nu = matrix_list_from_json(j["nu"], mp.h.dim, mp.g.dim, mp.g.dim, "nu");
  if (j.contains("N")) mp.N = matrix_from_json(j["N"]);
  if (j.contains("S")) mp.S = matrix_from_json(j["S"]);
  if (mp.N.has_value() != mp.S.has_value())
    throw std::invalid_argument("matched-pair: N and S must be given together");
  return mp;
}

json to_json(const NSMatchedPair& mp) {
  json j;
  j["p1"] = to_json(mp.p1);
  j["p2"] = to_json(mp.p2);
  j["l"] = matrix_list_to_json(mp.l);
  j["r"] = matrix_list_to_json(mp.r);
  j["psi"] = matrix_list_to_json(mp.psi);
  j["L"] = matrix_list_to_json(mp.L);
  j["R"] = matrix_list_to_json(mp.R);
  j["Psi"] = matrix_list_to_json(mp.Psi);
  return j;
}

NSMatchedPair ns_matched_pair_from_json(const json& j) {
  for (const char* k : {"p1", "p2", "l", "r", "psi", "L", "R", "Psi"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("ns-matched-pair: missing ") + k);
  NSMatchedPair mp;
  mp.p1 = nslie_from_json(j["p1"]);
  mp.p2 = nslie_from_json(j["p2"]);
  mp.l = matrix_list_from_json(j["l"], mp.p1.dim, mp.p2.dim, mp.p2.dim, "l");
  mp.r = matrix_list_from_json(j["r"], mp.p1.dim, mp.p2.dim, mp.p2.dim, "r");
  mp.psi = matrix_list_from_json(j["psi"], mp.p1.dim, mp.p2.dim, mp.p2.dim, "psi");
  mp.L = matrix_list_from_json(j["L"], mp.p2.dim, mp.p1.dim, mp.p1.dim, "L");
  mp.R = matrix_list_from_json(j["R"], mp.p2.dim, mp.p1.dim, mp.p1.dim, "R");
  mp.Psi = matrix_list_from_json(j["Psi"], mp.p2.dim, mp.p1.dim, mp.p1.dim, "Psi");
  return mp;
}

json to_json(const CrossedModuleNLie& cm) {
  json j;
  j["g"] = to_json(cm.g.L);
  j["gN"] = to_json(cm.g.N);
  j["h"] = to_json(cm.h.L);
  j["hS"] = to_json(cm.h.N);
  j["t"] = to_json(cm.t);
  j["rho"] = matrix_list_to_json(cm.rho);
  return j;
}

CrossedModuleNLie crossed_module_from_json(const json& j) {
  for (const char* k : {"g", "gN", "h", "hS", "t", "rho"})
    if (!j.contains(k)) throw std::invalid_argument(std::string("crossed-module: missing ") + k);
  CrossedModuleNLie cm;
  cm.g = NijenhuisPair{lie_from_json(j["g"]), matrix_from_json(j["gN"])};
  cm.h = NijenhuisPair{lie_from_json(j["h"]), matrix_from_json(j["hS"])};
  cm.t = matrix_from_json(j["t"]);
  if (cm.t.rows != cm.g.L.dim || cm.t.cols != cm.h.L.dim)
    throw std::invalid_argument("crossed-module: t must map h to g");
  cm.rho = matrix_list_from_json(j["rho"], cm.g.L.dim, cm.h.L.dim, cm.h.L.dim, "rho");
  return cm;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace nijlie
