#include "mopf/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mopf/error.hpp"
#include "mopf/geometry.hpp"
#include "mopf/instance.hpp"

namespace mopf {

using ordered_json = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeLimit: return kExitSizeLimit;
    case ErrorKind::NotAComplex:
    case ErrorKind::Unbounded: return kExitVerificationFailed;
    default: return kExitInputError;
  }
}

namespace {

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

FVectorReport cmd_fvector(const MarkedPoset& mp, const Limits& limits) {
  const ChainEnumeration chains = enumerate_admissible_chains(mp, limits);
  const CochainComplex complex = build_complex(mp, chains);
  FVectorReport r;
  r.dim = chains.dim;
  r.f = cohomology_fvector(complex);
  r.polynomial = f_polynomial(r.f);
  r.chain_counts = chains.counts();
  return r;
}

std::string render_text(const FVectorReport& r) {
  std::ostringstream out;
  out << "f = " << format_fvector(r.f) << "; f(t) = " << r.polynomial.display << "; dim = " << r.dim << '\n';
  out << "admissible chains by dimension: " << join_counts(r.chain_counts) << '\n';
  return out.str();
}

std::string render_json(const FVectorReport& r) {
  ordered_json j;
  j["format"] = 1;
  j["dim"] = r.dim;
  j["f_vector"] = r.f.f;
  j["f_polynomial"] = r.polynomial.coefficients;
  j["chain_counts"] = r.chain_counts;
  return j.dump() + "\n";
}

ChainsReport cmd_chains(const MarkedPoset& mp, std::optional<int> only_dim, const Limits& limits) {
  ChainEnumeration chains = enumerate_admissible_chains(mp, limits);
  ChainsReport r;
  r.dim = chains.dim;
  for (int d = 0; d <= chains.dim; ++d) {
    if (only_dim && *only_dim != d) continue;
    for (auto& c : chains.by_dim[d]) r.chains.push_back(std::move(c));
  }
  return r;
}

namespace {

std::string element_name(const MarkedPoset& mp, int x) {
  return mp.is_marked(x) ? format_rational(mp.value(x)) : mp.poset().label(x);
}

}  // namespace

std::string format_chain(const MarkedPoset& mp, const AdmissibleChain& c) {
  std::string out = "(∅";
  std::string members;
  const auto& blocks = c.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i].members.elements()) members += (members.empty() ? "" : ",") + element_name(mp, x);
    out += " ⊊ ";
    out += (i + 1 == blocks.size()) ? std::string("P") : "{" + members + "}";
  }
  return out + ")";
}

std::string render_text(const MarkedPoset& mp, const ChainsReport& r) {
  std::ostringstream out;
  for (const auto& c : r.chains) out << "[dim " << c.dim() << "] " << format_chain(mp, c) << '\n';
  return out.str();
}

std::string render_json(const MarkedPoset& mp, const ChainsReport& r) {
  const Poset& poset = mp.poset();
  ordered_json j;
  j["format"] = 1;
  j["dim"] = r.dim;
  j["chains"] = ordered_json::array();
  for (const auto& c : r.chains) {
    ordered_json jc;
    jc["dim"] = c.dim();
    jc["ideals"] = ordered_json::array();
    for (Ideal ideal : c.ideals()) {
      ordered_json labels = ordered_json::array();
      for (int x : ideal.elements()) labels.push_back(poset.label(x));
      jc["ideals"].push_back(labels);
    }
    jc["blocks"] = ordered_json::array();
    for (const auto& b : c.blocks()) {
      ordered_json jb;
      jb["elements"] = ordered_json::array();
      for (int x : b.members.elements()) jb["elements"].push_back(poset.label(x));
      jb["value"] = b.value ? ordered_json(format_rational(*b.value)) : ordered_json(nullptr);
      jc["blocks"].push_back(jb);
    }
    j["chains"].push_back(jc);
  }
  return j.dump() + "\n";
}

bool VerifyReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

bool corrupt_delta(CochainComplex& c) {
  for (std::size_t i = 0; i + 1 < c.deltas.size(); ++i) {
    const GF2Matrix& next = c.deltas[i + 1];
    GF2Matrix& d = c.deltas[i];
    if (d.cols() == 0) continue;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (next.column_support(r).empty()) continue;
      // Column 0 of the product changes by column r of `next`; if the
      // product was zero it no longer is, and otherwise it already failed.
      d.flip(r, 0);
      return true;
    }
  }
  return false;
}

VerifyReport cmd_verify(const MarkedPoset& mp, const VerifyOptions& options) {
  VerifyReport report;
  const ChainEnumeration chains = enumerate_admissible_chains(mp, options.limits);
  CochainComplex complex = build_complex(mp, chains);
  if (options.tamper) options.tamper(complex);

  const bool dd_zero = verify_dd_zero(complex);
  report.checks.push_back({"dd_zero", dd_zero, dd_zero ? "" : "NotAComplex: delta o delta != 0"});
  if (dd_zero) {
    const FVector f = cohomology_fvector(complex);
    report.f = f;
    const long long chi = f.euler_characteristic();
    report.checks.push_back({"euler", chi == 1, "alternating sum = " + std::to_string(chi)});
    const bool top = !f.f.empty() && f.f.back() == 1 && f.dim() == chains.dim;
    report.checks.push_back({"unique_top_face", top, "f_n = " + std::to_string(f.f.empty() ? 0 : f.f.back())});
  }

  if (options.oracle) {
    const CochainComplex geometric = build_geometric_complex(mp, options.limits);
    const bool same_basis = geometric.basis == complex.basis;
    const bool same_deltas = same_basis && geometric.deltas == complex.deltas;
    report.checks.push_back({"geometric_complex", same_deltas,
                             !same_basis ? "cell bases differ" : (same_deltas ? "" : "coboundary matrices differ")});

    const FVector faces = face_lattice(hrep(mp), options.limits).fvector();
    const bool faces_match = report.f && *report.f == faces;
    report.checks.push_back({"face_lattice", faces_match, "oracle f = " + format_fvector(faces)});

    const bool geo_match = verify_dd_zero(geometric) && cohomology_fvector(geometric) == faces;
    report.checks.push_back({"geometric_cohomology", geo_match, ""});
  }
  return report;
}

std::string render_text(const VerifyReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  if (r.f) out << "f = " << format_fvector(*r.f) << '\n';
  out << (r.passed() ? "verification passed" : "verification FAILED") << '\n';
  return out.str();
}

std::string render_json(const VerifyReport& r) {
  ordered_json j;
  j["format"] = 1;
  j["passed"] = r.passed();
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  if (r.f) j["f_vector"] = r.f->f;
  return j.dump() + "\n";
}

std::string cmd_gt(const GTShape& shape) {
  std::string text = "# Gelfand-Tsetlin pattern, top row (";
  for (int j = 0; j < shape.size(); ++j) text += (j ? "," : "") + std::to_string(shape.parts()[j]);
  text += ")\n" + emit_instance(gt_marked_poset(shape));
  parse_instance(text, "<gt>");
  return text;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face numbers of marked order polytopes", "mopf"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::optional<int> dim_filter;
  bool oracle = false;
  bool corrupt = false;
  std::vector<long> shape;
  std::string out_path;

  auto* fvector = app.add_subcommand("fvector", "f-vector from the cochain complex of admissible chains");
  fvector->add_option("FILE", file, "instance file")->required();
  fvector->add_flag("--json", json, "machine-readable output");

  auto* chains = app.add_subcommand("chains", "list admissible chains");
  chains->add_option("FILE", file, "instance file")->required();
  chains->add_option("--dim", dim_filter, "only chains of this dimension");
  chains->add_flag("--json", json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "check delta o delta = 0 and, with --oracle, geometry");
  verify->add_option("FILE", file, "instance file")->required();
  verify->add_flag("--oracle", oracle, "compare against the exact geometric oracle");
  verify->add_flag("--json", json, "machine-readable output");
  verify->add_flag("--corrupt-delta", corrupt, "")->group("");

  auto* gt = app.add_subcommand("gt", "emit the Gelfand-Tsetlin instance for a shape");
  gt->add_option("PARTS", shape, "weakly decreasing top row")->required()->expected(1, -1);
  gt->add_option("--out", out_path, "write to FILE instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gt->parsed()) {
      const std::string text = cmd_gt(GTShape(shape));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error(ErrorKind::Parse, out_path + ": cannot write file");
        f << text;
      }
      return kExitOk;
    }

    const MarkedPoset mp = load_instance(file);
    if (fvector->parsed()) {
      const auto r = cmd_fvector(mp);
      out << (json ? render_json(r) : render_text(r));
      return kExitOk;
    }
    if (chains->parsed()) {
      const auto r = cmd_chains(mp, dim_filter);
      out << (json ? render_json(mp, r) : render_text(mp, r));
      return kExitOk;
    }
    VerifyOptions options;
    options.oracle = oracle;
    if (corrupt) options.tamper = [](CochainComplex& c) { corrupt_delta(c); };
    const auto r = cmd_verify(mp, options);
    out << (json ? render_json(r) : render_text(r));
    return r.passed() ? kExitOk : kExitVerificationFailed;
  } catch (const Error& e) {
    err << "mopf: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace mopf
