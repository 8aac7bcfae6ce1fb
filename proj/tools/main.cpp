// affgrass: command-line front end to the library.
// Exit codes: 0 ok, 1 verification mismatch, 2 usage error.

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "affgrass/affine_data.hpp"
#include "affgrass/bijections.hpp"
#include "affgrass/charges.hpp"
#include "affgrass/grassmannian.hpp"
#include "affgrass/littlewood.hpp"
#include "affgrass/partitions.hpp"
#include "affgrass/qseries.hpp"

using namespace affgrass;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rat(const Rational& q) { return to_string(q); }

json vec(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

template <class T>
json ints(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

std::string text_vec(const QVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

template <class T>
std::string text_ints(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Partition partition_arg(const std::string& s) {
  try {
    return parse_partition(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed partition: ") + e.what());
  }
}

AffineType type_arg(const std::string& flag, std::optional<int> rank) {
  Kind k;
  try {
    k = parse_kind(flag);
  } catch (const std::exception&) {
    throw UsageError("unknown type '" + flag + "' (see: types --list)");
  }
  const int r = rank.value_or(fixed_rank(k) ? 2 : min_rank(k));
  try {
    return make_type(k, r);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// generic names for the --list table
std::string family_label(Kind k) {
  switch (k) {
    case Kind::A1: return "A_{n-1}^(1), rank = modulus n";
    case Kind::B1: return "B_n^(1)";
    case Kind::C1: return "C_n^(1)";
    case Kind::D1: return "D_n^(1)";
    case Kind::A2odd: return "A_{2n-1}^(2)";
    case Kind::A2: return "A_{2n}^(2)";
    case Kind::A2p: return "A'_{2n}^(2)";
    case Kind::D2: return "D_{n+1}^(2)";
    case Kind::G21: return "G_2^(1)";
    case Kind::D43: return "D_4^(3)";
  }
  return "?";
}

struct Out {
  bool as_json = true;
  json doc;
  std::ostringstream text;
  void flush() {
    if (as_json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

int cmd_littlewood(Out& out, int n, const std::string& ptext) {
  if (n < 1) throw UsageError("--n must be positive");
  const Partition p = partition_arg(ptext);
  const LittlewoodData d = decompose(p, n);
  int qsize = 0;
  json q = json::array();
  for (const auto& nu : d.quotient) {
    q.push_back(ints(nu));
    qsize += weight(nu);
  }
  out.doc = {{"n", n}, {"partition", ints(p)}, {"core", ints(d.core)}, {"quotient", q},
             {"shifts", ints(d.shifts)}, {"size", weight(p)}, {"core_size", weight(d.core)},
             {"quotient_size", qsize}};
  out.text << "core     " << format_partition(d.core) << "\nquotient (";
  for (std::size_t i = 0; i < d.quotient.size(); ++i)
    out.text << (i ? "," : "") << (d.quotient[i].empty() ? "-" : format_partition(d.quotient[i]));
  out.text << ")\n|lambda| = " << weight(p) << " = " << weight(d.core) << " + " << n << "*" << qsize << "\n";
  return 0;
}

int cmd_charge(Out& out, int n, const std::string& ptext) {
  if (n < 1) throw UsageError("--n must be positive");
  const Partition p = partition_arg(ptext);
  if (!is_core(p, n)) throw UsageError(format_partition(p) + " is not a " + std::to_string(n) + "-core");
  const Charge m = phi(p, n);
  const Int w = weight_from_charge(m);
  const bool ok = w == weight(p);
  out.doc = {{"n", n}, {"core", ints(p)}, {"charge", ints(m)}, {"weight_formula", to_string(w)},
             {"weight", weight(p)}, {"agree", ok}};
  out.text << "charge " << text_ints(m) << "\nweight " << weight(p) << " (formula " << to_string(w) << ")\n";
  return ok ? 0 : 1;
}

int cmd_types(Out& out, const std::string& flag, std::optional<int> rank) {
  if (flag.empty()) {
    out.doc = json::array();
    out.text << "flag   type                           ranks  dual\n";
    for (Kind k : all_kinds()) {
      const std::string ranks = fixed_rank(k) ? "2" : ">=" + std::to_string(min_rank(k));
      out.doc.push_back({{"flag", kind_flag(k)}, {"type", family_label(k)}, {"ranks", ranks}, {"dual", kind_flag(dual_kind(k))}});
      std::string line = kind_flag(k);
      line.resize(7, ' ');
      std::string name = family_label(k);
      name.resize(31, ' ');
      std::string r = ranks;
      r.resize(7, ' ');
      out.text << line << name << r << kind_flag(dual_kind(k)) << "\n";
    }
    return 0;
  }
  const AffineType t = type_arg(flag, rank);
  const CartanData& d = registry(t);
  json cartan = json::array();
  for (const auto& row : d.cartan) cartan.push_back(vec(row));
  out.doc = {{"type", display_name(t)}, {"flag", kind_flag(t.kind)}, {"rank", t.rank}, {"modulus", d.modulus},
             {"finite_kind", std::string(1, d.finite_kind)}, {"cartan", cartan}, {"marks", ints(d.marks)},
             {"comarks", ints(d.comarks)}, {"eta", rat(d.eta)}, {"eta_dual", rat(d.eta_dual)},
             {"eta_tilde", rat(d.eta_tilde)}, {"pi", vec(d.pi)}, {"core_model", core_model_name(d.core_model)},
             {"mstar", d.mstar_description}};
  out.text << display_name(t) << "  modulus " << d.modulus << "  finite " << d.finite_kind << d.finite_rank << "\n"
           << "marks   " << format_marks(d.marks) << "\ncomarks " << format_marks(d.comarks) << "\n"
           << "eta " << to_string(d.eta) << "  eta_dual " << to_string(d.eta_dual) << "  eta_tilde " << to_string(d.eta_tilde) << "\n"
           << "pi      " << text_vec(d.pi) << "\nmodel   " << core_model_name(d.core_model) << "\nM*      " << d.mstar_description << "\n";
  return 0;
}

int cmd_orbit(Out& out, const std::string& flag, std::optional<int> rank, int lmax, const std::string& grading) {
  const AffineType t = type_arg(flag, rank);
  if (lmax < 0) throw UsageError("--lmax must be >= 0");
  if (grading != "length" && grading != "dual") throw UsageError("--grading is length or dual");
  const auto orb = orbit(t, lmax, grading == "dual" ? Grading::DualLength : Grading::Length);
  out.doc = json::array();
  for (const auto& e : orb) {
    const GrassmannianElement g = lattice_element(t, e.core);
    out.doc.push_back({{"core", ints(e.core)}, {"beta", vec(g.beta)}, {"nu", vec(g.nu)}, {"u", ints(g.u)},
                       {"L", rat(e.length)}, {"Ldual", rat(e.dual_length)}, {"sign", g.signature}});
    out.text << "L=" << to_string(e.length) << "\tLdual=" << to_string(e.dual_length) << "\tsign=" << (g.signature > 0 ? "+" : "-")
             << "\t" << (e.core.empty() ? "-" : format_partition(e.core)) << "\n";
  }
  return 0;
}

int cmd_bijection(Out& out, const std::string& flag, std::optional<int> rank, const std::string& ctext) {
  const AffineType t = type_arg(flag, rank);
  const Partition core = partition_arg(ctext);
  if (!in_core_model(t, core))
    throw UsageError(format_partition(core) + " is not in the core model of " + display_name(t) + " (" +
                     core_model_name(registry(t).core_model) + ")");
  const GrassmannianElement g = lattice_element(t, core);
  const Rational L = atomic_length_closed(t, core);
  out.doc = {{"type", display_name(t)}, {"core", ints(core)}};
  out.text << display_name(t) << "  core " << format_partition(core) << "\n";
  if (t.kind != Kind::A1) {
    const TypedDistinct td = core_to_distinct(t, core);
    out.doc["lambda_bar"] = ints(td.lambda_bar);
    out.doc["c_prime"] = td.c_prime ? ints(*td.c_prime) : json(nullptr);
    if (auto f = constructed_family(t)) out.doc["family"] = family_name(f->family) + "_" + std::to_string(f->modulus);
    out.text << "lambda_bar " << format_partition(td.lambda_bar) << "\n";
    if (td.c_prime) out.text << "c'         " << format_partition(*td.c_prime) << "\n";
  }
  std::optional<std::vector<long>> coding;
  try {
    coding = correspondence_coding(t, core);
  } catch (const std::exception&) {
    // D1: the dual bijection is not injective, nothing to code
  }
  const QVec r = correspondence_lattice(g);
  out.doc["atomic_length"] = rat(L);
  out.doc["dual_atomic_length"] = rat(dual_atomic_length(t, core));
  out.doc["signature"] = g.signature;
  out.doc["v_coding"] = coding ? ints(*coding) : json(nullptr);
  out.doc["r"] = vec(r);
  out.doc["beta"] = vec(g.beta);
  out.doc["u"] = ints(g.u);
  out.text << "L " << to_string(L) << "  Ldual " << to_string(dual_atomic_length(t, core)) << "  sign " << g.signature << "\n"
           << "beta " << text_vec(g.beta) << "  u " << text_ints(g.u) << "\n"
           << "r " << text_vec(r);
  if (coding) out.text << "  v_coding " << text_ints(*coding);
  out.text << "\n";
  return 0;
}

int cmd_verify_no(Out& out, int order) {
  if (order < 0) throw UsageError("--order must be >= 0");
  const NoReport rep = nekrasov_okounkov_check(order);
  json rows = json::array();
  for (int m = 0; m <= order; ++m) {
    const bool eq = rep.lhs[m] == rep.rhs[m];
    json lc = json::array(), rc = json::array();
    for (const auto& c : rep.lhs[m].coeffs()) lc.push_back(to_string(c));
    for (const auto& c : rep.rhs[m].coeffs()) rc.push_back(to_string(c));
    rows.push_back({{"m", m}, {"equal", eq}, {"lhs", lc}, {"rhs", rc}});
    out.text << "q^" << m << "  " << (eq ? "equal" : "DIFFER") << "  " << rep.lhs[m].to_string() << "\n";
  }
  out.doc = {{"check", "nekrasov-okounkov"}, {"order", order}, {"ok", rep.ok()},
             {"first_mismatch", rep.ok() ? json(nullptr) : json(rep.first_mismatch)}, {"coefficients", rows}};
  return rep.ok() ? 0 : 1;
}

int cmd_verify_hande(Out& out, int qo, int uo) {
  if (qo < 0 || uo < 1) throw UsageError("--qorder >= 0 and --uorder >= 1 required");
  const HandeReport rep = hande_check(qo, uo);
  out.doc = {{"check", "u-analogue"}, {"qorder", qo}, {"uorder", uo}, {"ok", rep.ok()},
             {"lhs_terms", rep.lhs_terms}, {"rhs_terms", rep.rhs_terms},
             {"first_mismatch", rep.ok() ? json(nullptr) : json(rep.first_mismatch)}};
  out.text << (rep.ok() ? "equal" : "DIFFER") << " mod (q^" << qo + 1 << ", u^" << uo << "), " << rep.lhs_terms << " terms\n";
  if (!rep.ok()) out.text << rep.first_mismatch << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_verify_delta(Out& out, const std::string& flag, std::optional<int> rank, int order) {
  const AffineType t = type_arg(flag, rank);
  if (order < 0) throw UsageError("--order must be >= 0");
  if (registry(t).finite_rank > 4) throw UsageError("delta check supports finite rank <= 4");
  const DeltaReport rep = delta_check(t, order);
  out.doc = {{"check", "denominator"}, {"type", display_name(t)}, {"order", order}, {"ok", rep.ok()},
             {"characters_equal", rep.characters_equal}, {"laurent_equal", rep.laurent_equal},
             {"grassmannian_terms", rep.grassmannian_terms}, {"translation_terms", rep.translation_terms},
             {"first_mismatch", rep.ok() ? json(nullptr) : json(rep.first_mismatch)}};
  out.text << display_name(t) << " mod q^" << order + 1 << ": " << (rep.ok() ? "equal" : "DIFFER") << " ("
           << rep.grassmannian_terms << " vs " << rep.translation_terms << " character terms)\n";
  if (!rep.ok()) out.text << rep.first_mismatch << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_verify_macdonald(Out& out, const std::string& flag, std::optional<int> rank, int order) {
  const AffineType t = type_arg(flag, rank);
  if (t.kind != Kind::A1) throw UsageError("macdonald check is implemented for A1 only");
  if (order < 0) throw UsageError("--order must be >= 0");
  const MacdonaldReport rep = macdonald_check(t, order);
  json lc = json::array(), rc = json::array();
  for (const auto& c : rep.lhs) lc.push_back(to_string(c));
  for (const auto& c : rep.rhs) rc.push_back(to_string(c));
  out.doc = {{"check", "macdonald"}, {"type", display_name(t)}, {"order", order}, {"dimension", rep.dimension},
             {"ok", rep.ok()}, {"first_mismatch", rep.ok() ? json(nullptr) : json(rep.first_mismatch)},
             {"lhs", lc}, {"rhs", rc}};
  out.text << display_name(t) << " prod (1-q^k)^" << rep.dimension << " mod q^" << order + 1 << ": "
           << (rep.ok() ? "equal" : "DIFFER at q^" + std::to_string(rep.first_mismatch)) << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine Grassmannian elements, cores and hook-length identities"};
  app.require_subcommand(1);
  std::string emit = "json";
  app.add_option("--emit", emit, "output format")->check(CLI::IsMember({"json", "text"}));

  int n = 0;
  std::string ptext, flag, ctext, grading = "length";
  std::optional<int> rank;
  int lmax = 10, order = 5, qorder = 4, uorder = 12;
  bool list = false;

  auto* lw = app.add_subcommand("littlewood", "core and quotient of a partition");
  lw->add_option("--n", n)->required();
  lw->add_option("--partition", ptext)->required();

  auto* ch = app.add_subcommand("charge", "charge vector of an n-core");
  ch->add_option("--n", n)->required();
  ch->add_option("--partition", ptext)->required();

  auto* ty = app.add_subcommand("types", "type flags, or data of one type");
  ty->add_flag("--list", list);
  ty->add_option("--type", flag);
  ty->add_option("--rank", rank);

  auto* ob = app.add_subcommand("orbit", "Grassmannian elements up to a length bound");
  ob->add_option("--type", flag)->required();
  ob->add_option("--rank", rank);
  ob->add_option("--lmax", lmax);
  ob->add_option("--grading", grading, "length or dual");

  auto* bj = app.add_subcommand("bijection", "typed distinct partition and weights of a core");
  bj->add_option("--type", flag)->required();
  bj->add_option("--rank", rank);
  bj->add_option("--core", ctext)->required();

  auto* vf = app.add_subcommand("verify", "series identities");
  vf->require_subcommand(1);
  auto* vno = vf->add_subcommand("no", "hook-length formula as polynomials in z");
  vno->add_option("--order", order);
  auto* vh = vf->add_subcommand("hande", "u-analogue");
  vh->add_option("--qorder", qorder);
  vh->add_option("--uorder", uorder);
  auto* vd = vf->add_subcommand("delta", "denominator: Grassmannian sum against lattice sum");
  vd->add_option("--type", flag)->required();
  vd->add_option("--rank", rank);
  vd->add_option("--order", order);
  auto* vm = vf->add_subcommand("macdonald", "specialised denominator against the Euler product");
  vm->add_option("--type", flag)->required();
  vm->add_option("--rank", rank);
  vm->add_option("--order", order);

  for (auto* sub : {lw, ch, ty, ob, bj, vf, vno, vh, vd, vm}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Out out;
  out.as_json = emit == "json";
  int code = 0;
  try {
    if (*lw) code = cmd_littlewood(out, n, ptext);
    else if (*ch) code = cmd_charge(out, n, ptext);
    else if (*ty) code = cmd_types(out, list ? std::string() : flag, rank);
    else if (*ob) code = cmd_orbit(out, flag, rank, lmax, grading);
    else if (*bj) code = cmd_bijection(out, flag, rank, ctext);
    else if (*vno) code = cmd_verify_no(out, order);
    else if (*vh) code = cmd_verify_hande(out, qorder, uorder);
    else if (*vd) code = cmd_verify_delta(out, flag, rank, order);
    else if (*vm) code = cmd_verify_macdonald(out, flag, rank, order);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  out.flush();
  return code;
}
