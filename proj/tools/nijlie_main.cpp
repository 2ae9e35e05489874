// Command-line front end: load JSON fixtures, run the checkers,
// constructors and cohomology computations, emit machine-readable
// reports.  Exit codes: 0 pass, 1 fail, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nijlie/bialgebra.hpp"
#include "nijlie/cone.hpp"
#include "nijlie/deformation.hpp"
#include "nijlie/homotopy.hpp"
#include "nijlie/json_io.hpp"
#include "nijlie/nslie.hpp"

using namespace nijlie;

namespace {

struct Options {
  bool json = false;
  bool witnesses = false;
  int up_to = -1;
  std::string coeff = "adjoint";
  std::string out;
};

struct RunReport {
  std::string command;
  std::string status;  // pass | fail | error
  std::vector<Witness> witnesses;
  json tables = json::array();
  json payload;  // constructed object, when any

  int exit_code() const { return status == "pass" ? 0 : (status == "fail" ? 1 : 2); }
};

json witness_json(const Witness& w) {
  json j;
  j["label"] = w.label;
  j["indices"] = w.indices;
  json res = json::array();
  for (const auto& r : w.residual) res.push_back(rat_str(r));
  j["residual"] = res;
  return j;
}

void emit(const RunReport& rep, const Options& opt) {
  if (opt.json) {
    json j;
    j["command"] = rep.command;
    j["status"] = rep.status;
    json ws = json::array();
    for (const auto& w : rep.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
    j["tables"] = rep.tables;
    if (!rep.payload.is_null()) j["result"] = rep.payload;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << rep.command << ": " << rep.status << "\n";
  for (const auto& t : rep.tables) {
    std::cout << t["name"].get<std::string>() << ":\n";
    for (const auto& row : t["rows"]) {
      std::cout << " ";
      for (const auto& cell : row) {
        if (cell.is_string())
          std::cout << " " << cell.get<std::string>();
        else
          std::cout << " " << cell.dump();
      }
      std::cout << "\n";
    }
  }
  if (!rep.witnesses.empty()) {
    std::cout << "violations: " << rep.witnesses.size() << "\n";
    std::size_t shown =
        opt.witnesses ? rep.witnesses.size() : std::min<std::size_t>(rep.witnesses.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& w = rep.witnesses[i];
      std::cout << "  " << w.label << " at (";
      for (std::size_t k = 0; k < w.indices.size(); ++k)
        std::cout << (k ? "," : "") << w.indices[k] + 1;
      std::cout << "): residual " << vec_str(w.residual) << "\n";
    }
    if (shown < rep.witnesses.size())
      std::cout << "  ... (" << rep.witnesses.size() - shown << " more; use --witnesses)\n";
  }
  if (!rep.payload.is_null() && opt.out.empty()) std::cout << rep.payload.dump(2) << "\n";
}

void require_files(const std::vector<std::string>& files, std::size_t n, const std::string& what) {
  if (files.size() != n)
    throw std::invalid_argument(what + ": expected " + std::to_string(n) + " input file(s), got " +
                                std::to_string(files.size()));
}

Matrix load_operator(const std::string& path) { return matrix_from_json(load_json_file(path)); }

NijenhuisRep load_nrep(const json& j, const LieAlgebra& base) {
  NijenhuisRep nrep;
  nrep.rep = rep_from_json(j, base);
  if (!j.contains("S")) throw std::invalid_argument("nijenhuis representation: missing S");
  nrep.S = matrix_from_json(j["S"]);
  return nrep;
}

CheckReport run_check(const std::string& kind, const std::vector<std::string>& files) {
  if (kind == "lie") {
    require_files(files, 1, kind);
    return check_lie(lie_from_json(load_json_file(files[0])));
  }
  if (kind == "nijenhuis") {
    require_files(files, 2, kind);
    return check_nijenhuis(lie_from_json(load_json_file(files[0])), load_operator(files[1]));
  }
  if (kind == "rep") {
    require_files(files, 2, kind);
    LieAlgebra L = lie_from_json(load_json_file(files[0]));
    return check_representation(rep_from_json(load_json_file(files[1]), L));
  }
  if (kind == "nijenhuis-rep") {
    require_files(files, 3, kind);
    LieAlgebra L = lie_from_json(load_json_file(files[0]));
    Matrix N = load_operator(files[1]);
    NijenhuisRep nrep = load_nrep(load_json_file(files[2]), L);
    CheckReport out = check_nijenhuis(L, N);
    out.merge(check_representation(nrep.rep), "rep");
    out.merge(check_nijenhuis_rep(L, N, nrep));
    return out;
  }
  if (kind == "coalgebra") {
    require_files(files, 1, kind);
    return check_coalgebra(cobracket_from_json(load_json_file(files[0])));
  }
  if (kind == "coalgebra-nijenhuis") {
    require_files(files, 2, kind);
    Cobracket co = cobracket_from_json(load_json_file(files[0]));
    CheckReport out = check_coalgebra(co);
    out.merge(check_coalgebra_nijenhuis(co, load_operator(files[1])));
    return out;
  }
  if (kind == "matched-pair") {
    require_files(files, 1, kind);
    return check_matched_pair(matched_pair_from_json(load_json_file(files[0])));
  }
  if (kind == "manin") {
    require_files(files, 1, kind);
    json j = load_json_file(files[0]);
    auto pair_of = [&](const char* key) {
      if (!j.contains(key)) throw std::invalid_argument(std::string("manin: missing ") + key);
      return NijenhuisPair{lie_from_json(j[key]["algebra"]), matrix_from_json(j[key]["N"])};
    };
    return check_manin_triple(pair_of("big"), pair_of("g"), pair_of("gstar"));
  }
  if (kind == "bialgebra") {
    require_files(files, 1, kind);
    json j = load_json_file(files[0]);
    for (const char* k : {"algebra", "N", "delta", "S"})
      if (!j.contains(k)) throw std::invalid_argument(std::string("bialgebra: missing ") + k);
    LieAlgebra L = lie_from_json(j["algebra"]);
    Matrix N = matrix_from_json(j["N"]);
    Cobracket co = cobracket_from_json(j["delta"]);
    Matrix S = matrix_from_json(j["S"]);
    CheckReport out;
    out.merge(check_lie(L), "lie");
    out.merge(check_nijenhuis(L, N), "nijenhuis");
    out.merge(check_coalgebra(co), "coalgebra");
    out.merge(check_coalgebra_nijenhuis(co, S), "coalgebra-nijenhuis");
    out.merge(check_nijenhuis_bialgebra(L, N, co, S));
    return out;
  }
  if (kind == "cybe") {
    require_files(files, 2, kind);
    LieAlgebra L = lie_from_json(load_json_file(files[0]));
    Tensor2 r = tensor2_from_json(load_json_file(files[1]));
    CheckReport out;
    out.add_nonzero("cybe-sum", {}, cybe(L, r).sum.flatten());
    return out;
  }
  if (kind == "admissible-cybe") {
    require_files(files, 4, kind);
    return check_admissible_cybe(lie_from_json(load_json_file(files[0])), load_operator(files[1]),
                                 load_operator(files[2]),
                                 tensor2_from_json(load_json_file(files[3])));
  }
  if (kind == "o-operator") {
    require_files(files, 4, kind);
    LieAlgebra L = lie_from_json(load_json_file(files[0]));
    Matrix N = load_operator(files[1]);
    NijenhuisRep nrep = load_nrep(load_json_file(files[2]), L);
    return check_o_operator(L, N, nrep, load_operator(files[3]));
  }
  if (kind == "nslie") {
    require_files(files, 1, kind);
    return check_nslie(nslie_from_json(load_json_file(files[0])));
  }
  if (kind == "ns-rep") {
    require_files(files, 2, kind);
    NSLie P = nslie_from_json(load_json_file(files[0]));
    return check_nsrep(P, nsrep_from_json(load_json_file(files[1])));
  }
  if (kind == "ns-matched-pair") {
    require_files(files, 1, kind);
    return check_matched_pair_nslie(ns_matched_pair_from_json(load_json_file(files[0])));
  }
  if (kind == "2term") {
    require_files(files, 1, kind);
    return check_2term(two_term_from_json(load_json_file(files[0])));
  }
  if (kind == "homotopy-nijenhuis") {
    require_files(files, 2, kind);
    TwoTermL T = two_term_from_json(load_json_file(files[0]));
    CheckReport out = check_2term(T);
    out.merge(
        check_homotopy_nijenhuis(T, homotopy_nijenhuis_from_json(load_json_file(files[1]), T)));
    return out;
  }
  if (kind == "crossed-module") {
    require_files(files, 1, kind);
    return check_crossed_module(crossed_module_from_json(load_json_file(files[0])));
  }
  if (kind == "deformation") {
    require_files(files, 1, kind);
    json j = load_json_file(files[0]);
    for (const char* k : {"algebra", "N"})
      if (!j.contains(k)) throw std::invalid_argument(std::string("deformation: missing ") + k);
    NijenhuisPair base{lie_from_json(j["algebra"]), matrix_from_json(j["N"])};
    CheckReport pre = check_nijenhuis(base.L, base.N);
    if (!pre.ok()) return pre;
    std::vector<Matrix> terms;
    if (j.contains("terms"))
      for (const auto& t : j["terms"]) terms.push_back(matrix_from_json(t));
    if (j.contains("mu_terms")) {
      TruncatedDeformation def;
      def.base = base;
      def.N_terms = terms;
      for (const auto& m : j["mu_terms"]) def.mu_terms.push_back(altmap_from_json(m));
      return check_truncated(def);
    }
    return check_order_n(OrderNDeformation{base, terms});
  }
  throw std::invalid_argument("unknown check kind: " + kind);
}

json dims_table(const std::string& name, const CochainComplexReport& rep) {
  json t;
  t["name"] = name;
  json rows = json::array();
  rows.push_back(json::array({"degree", "dim C^n", "ker", "im out", "H^n"}));
  for (const auto& d : rep.degrees)
    rows.push_back(json::array({std::to_string(d.n), std::to_string(d.dim_cochains),
                                std::to_string(d.dim_kernel), std::to_string(d.rank_d),
                                std::to_string(d.dim_h)}));
  t["rows"] = rows;
  return t;
}

json representatives_json(const CochainComplexReport& rep) {
  json out = json::array();
  for (std::size_t n = 0; n < rep.degrees.size(); ++n) {
    Matrix kern = kernel_basis(rep.degrees[n].d);
    Matrix image(rep.degrees[n].dim_cochains, 0);
    if (n > 0) image = rep.degrees[n - 1].d;
    Matrix reps = coset_representatives(kern, image);
    json entry;
    entry["degree"] = static_cast<int>(n);
    json cols = json::array();
    for (int c = 0; c < reps.cols; ++c) {
      json v = json::array();
      for (int i = 0; i < reps.rows; ++i) v.push_back(rat_str(reps.at(i, c)));
      cols.push_back(v);
    }
    entry["representatives"] = cols;
    out.push_back(entry);
  }
  return out;
}

RunReport run_cohomology(const std::string& kind, const std::vector<std::string>& files,
                         const Options& opt) {
  RunReport out;
  out.command = "cohomology " + kind;
  CochainComplexReport rep;
  if (kind == "ce") {
    require_files(files, 1, kind);
    LieAlgebra L = lie_from_json(load_json_file(files[0]));
    if (!check_lie(L).ok()) throw std::invalid_argument("ce: input is not a Lie algebra");
    Representation r;
    if (opt.coeff == "adjoint")
      r = adjoint_rep(L);
    else if (opt.coeff == "trivial")
      r = trivial_rep(L, 1);
    else
      r = rep_from_json(load_json_file(opt.coeff), L);
    if (!check_representation(r).ok())
      throw std::invalid_argument("ce: coefficients are not a representation");
    int up_to = opt.up_to < 0 ? L.dim : std::min(opt.up_to, L.dim + 1);
    rep = ce_cohomology(r, up_to);
    out.tables.push_back(dims_table("H^n_CE", rep));
  } else if (kind == "nop") {
    require_files(files, 2, kind);
    NijenhuisPair pair{lie_from_json(load_json_file(files[0])), load_operator(files[1])};
    if (!check_lie(pair.L).ok() || !check_nijenhuis(pair.L, pair.N).ok())
      throw std::invalid_argument("nop: input is not a Nijenhuis Lie algebra");
    int up_to = opt.up_to < 0 ? pair.L.dim : opt.up_to;
    rep = nijenhuis_cohomology(pair, up_to);
    out.tables.push_back(dims_table("H^n(N)", rep));
  } else if (kind == "nlie") {
    if (files.size() != 2 && files.size() != 3)
      throw std::invalid_argument("nlie: expected algebra, N [, nijenhuis-rep]");
    NijenhuisPair pair{lie_from_json(load_json_file(files[0])), load_operator(files[1])};
    if (!check_lie(pair.L).ok() || !check_nijenhuis(pair.L, pair.N).ok())
      throw std::invalid_argument("nlie: input is not a Nijenhuis Lie algebra");
    NijenhuisRep nrep = files.size() == 3 ? load_nrep(load_json_file(files[2]), pair.L)
                                          : adjoint_nijenhuis_rep(pair);
    if (!check_representation(nrep.rep).ok() || !check_nijenhuis_rep(pair.L, pair.N, nrep).ok())
      throw std::invalid_argument("nlie: coefficients are not a Nijenhuis representation");
    int up_to = opt.up_to < 0 ? pair.L.dim + 1 : opt.up_to;
    rep = nlie_cohomology(pair, nrep, up_to);
    out.tables.push_back(dims_table("H^n_NLie", rep));
  } else {
    throw std::invalid_argument("unknown cohomology kind: " + kind);
  }
  if (opt.witnesses) out.payload = representatives_json(rep);
  out.status = "pass";
  return out;
}

RunReport run_construct(const std::string& kind, const std::vector<std::string>& files,
                        const Options& opt) {
  RunReport out;
  out.command = "construct " + kind;
  if (kind == "deformed-bracket") {
    require_files(files, 2, kind);
    NijenhuisPair pair{lie_from_json(load_json_file(files[0])), load_operator(files[1])};
    out.payload = to_json(deformed_bracket(pair));
  } else if (kind == "deformed-cobracket") {
    require_files(files, 2, kind);
    out.payload = to_json(deformed_cobracket(cobracket_from_json(load_json_file(files[0])),
                                             load_operator(files[1])));
  } else if (kind == "semidirect") {
    require_files(files, 2, kind);
    LieAlgebra L = lie_from_json(load_json_file(files[0]));
    Representation rep = rep_from_json(load_json_file(files[1]), L);
    if (!check_lie(L).ok() || !check_representation(rep).ok())
      throw std::invalid_argument("semidirect: invalid algebra or representation");
    out.payload = to_json(semidirect(L, rep));
  } else if (kind == "bicrossed") {
    require_files(files, 1, kind);
    BicrossedResult bic = bicrossed(matched_pair_from_json(load_json_file(files[0])));
    if (bic.op) {
      out.payload = json::object();
      out.payload["algebra"] = to_json(bic.algebra);
      out.payload["N"] = to_json(*bic.op);
    } else {
      out.payload = to_json(bic.algebra);
    }
  } else if (kind == "induce-nslie") {
    require_files(files, 2, kind);
    NijenhuisPair pair{lie_from_json(load_json_file(files[0])), load_operator(files[1])};
    out.payload = to_json(induce_from_nijenhuis(pair));
  } else if (kind == "skeletal-from-cocycle") {
    require_files(files, 5, kind);
    NijenhuisPair pair{lie_from_json(load_json_file(files[0])), load_operator(files[1])};
    NijenhuisRep nrep = load_nrep(load_json_file(files[2]), pair.L);
    AltMap chi = altmap_from_json(load_json_file(files[3]));
    AltMap F = altmap_from_json(load_json_file(files[4]));
    auto [T, HN] = cocycle_to_skeletal(pair, nrep, chi, F);
    out.payload = json::object();
    out.payload["2term"] = to_json(T);
    out.payload["homotopy_nijenhuis"] = to_json(HN);
  } else if (kind == "crossed-from-strict") {
    require_files(files, 2, kind);
    TwoTermL T = two_term_from_json(load_json_file(files[0]));
    HomotopyNijenhuis HN = homotopy_nijenhuis_from_json(load_json_file(files[1]), T);
    out.payload = to_json(strict_to_crossed(T, HN));
  } else if (kind == "coboundary-cobracket") {
    require_files(files, 2, kind);
    LieAlgebra L = lie_from_json(load_json_file(files[0]));
    if (!check_lie(L).ok()) throw std::invalid_argument("coboundary-cobracket: invalid algebra");
    out.payload = to_json(coboundary_cobracket(L, tensor2_from_json(load_json_file(files[1]))));
  } else if (kind == "lift-rb") {
    require_files(files, 3, kind);
    LieAlgebra L = lie_from_json(load_json_file(files[0]));
    Representation rep = rep_from_json(load_json_file(files[1]), L);
    NijenhuisPair lifted = lift_rb(L, rep, load_operator(files[2]));
    out.payload = json::object();
    out.payload["algebra"] = to_json(lifted.L);
    out.payload["N"] = to_json(lifted.N);
  } else {
    throw std::invalid_argument("unknown construct kind: " + kind);
  }
  if (!opt.out.empty()) save_json_file(opt.out, out.payload);
  out.status = "pass";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for Nijenhuis structures on Lie algebras"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit a JSON report on stdout");
  app.add_flag("--witnesses", opt.witnesses, "list all violation witnesses / representatives");

  std::string kind;
  std::vector<std::string> files;

  CLI::App* chk = app.add_subcommand("check", "verify a structure against its axioms");
  chk->fallthrough();
  chk->add_option("kind", kind, "what to check")->required();
  chk->add_option("files", files, "input JSON files")->required();

  CLI::App* coh = app.add_subcommand("cohomology", "per-degree dimension tables");
  coh->fallthrough();
  coh->add_option("kind", kind, "ce | nop | nlie")->required();
  coh->add_option("files", files, "input JSON files")->required();
  coh->add_option("--up-to", opt.up_to, "top degree");
  coh->add_option("--coeff", opt.coeff, "ce coefficients: adjoint | trivial | <rep file>");

  CLI::App* con = app.add_subcommand("construct", "build derived structures");
  con->fallthrough();
  con->add_option("kind", kind, "what to construct")->required();
  con->add_option("files", files, "input JSON files")->required();
  con->add_option("--out", opt.out, "write the result to a file");

  CLI11_PARSE(app, argc, argv);

  RunReport rep;
  try {
    if (chk->parsed()) {
      CheckReport r = run_check(kind, files);
      rep.command = "check " + kind;
      rep.status = r.ok() ? "pass" : "fail";
      rep.witnesses = r.witnesses;
    } else if (coh->parsed()) {
      rep = run_cohomology(kind, files, opt);
    } else {
      rep = run_construct(kind, files, opt);
    }
  } catch (const std::exception& e) {
    rep.command = rep.command.empty() ? "error" : rep.command;
    rep.status = "error";
    if (opt.json) {
      json j;
      j["command"] = rep.command;
      j["status"] = "error";
      j["message"] = e.what();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  emit(rep, opt);
  return rep.exit_code();
}
