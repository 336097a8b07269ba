#include "lpfb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "lpfb/factor.hpp"
#include "lpfb/generators.hpp"
#include "lpfb/glstructure.hpp"
#include "lpfb/io.hpp"
#include "lpfb/transform.hpp"

namespace lpfb::cli {

namespace {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_precondition(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse_error:
    case ErrorKind::duplicate_tap:
    case ErrorKind::zero_tap:
    case ErrorKind::factorization_stuck:
      return false;
    default:
      return true;
  }
}

std::string tag_text(const LaurentPoly& f) {
  if (f.is_zero()) return "zero";
  std::ostringstream os;
  os << classify_symmetry(f);
  return os.str();
}

// The two Haar factorizations and the 8-step identity cascade, in application order.
LiftingCascade haar_scaled() {
  LiftingCascade c;
  c.scale = GainScale(2);
  c.steps = {upper(1), lower(Coefficient(-1, 2))};
  return c;
}

LiftingCascade haar_unscaled() {
  LiftingCascade c;
  c.steps = {lower(-1), upper(Coefficient(1, 2))};
  return c;
}

LiftingCascade identity_cascade() {
  LiftingCascade c;
  c.steps = {upper(Coefficient(-1, 2)), lower(1), upper(1), lower(Coefficient(-1, 2)),
             upper(2), lower(Coefficient(1, 2)), upper(-1), lower(-1)};
  return c;
}

void print_orders(std::ostream& out, const OrderReport& r) {
  out << "orders:";
  for (long o : r.orders) out << " " << o;
  out << "\norder-increasing: " << (r.increasing ? "true" : "false") << "\n";
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const BankFile file = parse_bank(slurp(path));
  const PolyphaseMatrix& h = file.bank;
  const BankClass cls = classify_bank(h);
  const DetInfo d = det_info(h);
  out << "class: " << to_string(cls.kind) << "\n";
  if (cls.kind == BankKind::hs_concentric) {
    out << "equal-length-base: " << (cls.equal_length_base ? "true" : "false") << "\n";
  }
  if (d.monomial) {
    out << "det: amplitude " << d.amplitude << " delay " << d.delay
        << (d.unimodular() ? " unimodular" : "") << "\n";
  } else {
    out << "det: not a monomial\n";
  }
  if (cls.kind == BankKind::ws_delay_minimized || cls.kind == BankKind::ws_general) {
    out << "group-delays: " << cls.d0 << " " << cls.d1 << "\n";
  } else if (cls.kind == BankKind::hs_concentric) {
    out << "group-delays: " << *classify_symmetry(h.filter(0)).axis << " "
        << *classify_symmetry(h.filter(1)).axis << "\n";
  }
  out << "h0: " << tag_text(h.filter(0)) << "\n";
  out << "h1: " << tag_text(h.filter(1)) << "\n";
  return exit_ok;
}

int cmd_factor(const std::string& path, const std::string& structure, bool dc,
               const std::string& policy, std::ostream& out) {
  const PolyphaseMatrix h = parse_bank(slurp(path)).bank;
  LiftingCascade c;
  if (structure == "ws") {
    c = factor_ws(h);
  } else if (structure == "hs") {
    c = factor_hs(h, dc);
  } else {
    c = factor_euclidean(h, policy == "B" ? PivotPolicy::lower_left : PivotPolicy::upper_right);
  }
  out << print_cascade(c);
  return exit_ok;
}

int cmd_product(const std::string& path, std::ostream& out) {
  out << print_bank(cascade_product(parse_cascade(slurp(path))));
  return exit_ok;
}

struct VerifyOptions {
  bool order_increasing = false;
  std::string structure;
  bool pr = false;
  int trials = 16;
  std::uint64_t seed = 1;
};

int cmd_verify(const std::string& path, VerifyOptions opt, std::ostream& out) {
  const LiftingCascade c = parse_cascade(slurp(path));
  if (!opt.order_increasing && opt.structure.empty()) opt.pr = true;
  bool ok = true;
  if (opt.order_increasing) {
    const OrderReport r = check_order_increasing(c);
    print_orders(out, r);
    ok = ok && r.increasing;
  }
  if (!opt.structure.empty()) {
    const GroupLiftingStructure g =
        opt.structure == "ws" ? GroupLiftingStructure::ws() : GroupLiftingStructure::hs();
    const bool member = is_irreducible(c) && cascade_in_structure(g, c);
    out << "structure " << opt.structure << ": " << (member ? "pass" : "fail") << "\n";
    ok = ok && member;
  }
  if (opt.pr) {
    const PRReport r = verify_pr(c, opt.trials, opt.seed);
    out << "pr: " << (r.ok ? "pass" : "fail") << " amplitude " << r.amplitude << " delay "
        << r.delay << "\n";
    ok = ok && r.ok;
  }
  return ok ? exit_ok : exit_verify_failed;
}

int cmd_equiv(const std::string& a, const std::string& b, std::ostream& out) {
  const auto w = equivalent_mod_rescaling(parse_cascade(slurp(a)), parse_cascade(slurp(b)));
  if (!w) {
    out << "NOT-EQUIVALENT\n";
    return exit_verify_failed;
  }
  out << "alpha " << w->alpha << "\n";
  return exit_ok;
}

int cmd_roundtrip(const std::string& path, long length, std::uint64_t seed, bool reversible,
                  std::ostream& out) {
  const LiftingCascade c = parse_cascade(slurp(path));
  Rng rng(seed);
  const Signal x = random_signal(rng, length, reversible);
  const Signal back = reversible ? reversible_synthesis(c, reversible_analysis(c, x))
                                 : apply_synthesis(c, apply_analysis(c, x));
  const bool exact = back == x;
  out << (reversible ? "reversible" : "linear") << " round trip, length " << length << ": "
      << (exact ? "exact" : "MISMATCH") << "\n";
  return exact ? exit_ok : exit_verify_failed;
}

bool report_cascade(std::ostream& out, const std::string& label, const LiftingCascade& c,
                    const PolyphaseMatrix& expected) {
  const PolyphaseMatrix p = cascade_product(c);
  out << label << ": " << c << "\n" << print_cascade(c);
  out << "product: " << p << (p == expected ? " ok" : " MISMATCH") << "\n";
  return p == expected;
}

int cmd_demo(const std::string& which, std::ostream& out) {
  bool ok = true;
  if (which == "haar") {
    const PolyphaseMatrix h = haar_bank();
    out << "Haar bank\n" << print_bank(h, "haar");
    ok = report_cascade(out, "scaled", haar_scaled(), h) && ok;
    ok = report_cascade(out, "unscaled", haar_unscaled(), h) && ok;
    const bool distinct = !equivalent_mod_rescaling(haar_scaled(), haar_unscaled());
    out << "equivalent modulo rescaling: " << (distinct ? "no" : "yes") << "\n";
    ok = ok && distinct;
  } else {
    const LiftingCascade c = identity_cascade();
    ok = report_cascade(out, "identity", c, PolyphaseMatrix::identity());
    const OrderReport r = check_order_increasing(c);
    print_orders(out, r);
    ok = ok && !r.increasing;
  }
  out << (ok ? "verified" : "FAILED") << "\n";
  return ok ? exit_ok : exit_verify_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lifting factorization of two-channel FIR filter banks", "lpfb"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string path, path2, structure = "euclidean", policy = "A", which;
  bool normalize = false, reversible = false;
  long length = 256;
  std::uint64_t seed = 1;
  VerifyOptions vopt;

  auto* classify = app.add_subcommand("classify", "Classify a filter bank file");
  classify->add_option("bank", path, "Bank file")->required();
  classify->callback([&] { action = [&] { return cmd_classify(path, out); }; });

  auto* factor = app.add_subcommand("factor", "Factor a bank into a lifting cascade");
  factor->add_option("bank", path, "Bank file")->required();
  factor->add_option("--structure", structure, "ws, hs or euclidean")
      ->check(CLI::IsMember({"ws", "hs", "euclidean"}));
  factor->add_flag("--normalize-dc", normalize, "Rescale the HS base so that B0(1) = 1");
  factor->add_option("--policy", policy, "Euclidean pivot policy A or B")
      ->check(CLI::IsMember({"A", "B"}));
  factor->callback([&] { action = [&] { return cmd_factor(path, structure, normalize, policy, out); }; });

  auto* product = app.add_subcommand("product", "Multiply out a cascade");
  product->add_option("cascade", path, "Cascade file")->required();
  product->callback([&] { action = [&] { return cmd_product(path, out); }; });

  auto* verify = app.add_subcommand("verify", "Check properties of a cascade");
  verify->add_option("cascade", path, "Cascade file")->required();
  verify->add_flag("--order-increasing", vopt.order_increasing, "Check polyphase order growth");
  verify->add_option("--structure", vopt.structure, "Membership in ws or hs")
      ->check(CLI::IsMember({"ws", "hs"}));
  verify->add_flag("--pr", vopt.pr, "Check perfect reconstruction");
  verify->add_option("--trials", vopt.trials, "Random signals for --pr")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "Seed for --pr");
  verify->callback([&] { action = [&] { return cmd_verify(path, vopt, out); }; });

  auto* equiv = app.add_subcommand("equiv", "Compare two cascades modulo rescaling");
  equiv->add_option("first", path, "Cascade file")->required();
  equiv->add_option("second", path2, "Cascade file")->required();
  equiv->callback([&] { action = [&] { return cmd_equiv(path, path2, out); }; });

  auto* roundtrip = app.add_subcommand("roundtrip", "Analysis then synthesis of a random signal");
  roundtrip->add_option("cascade", path, "Cascade file")->required();
  roundtrip->add_option("--length", length, "Signal length")->check(CLI::PositiveNumber);
  roundtrip->add_option("--seed", seed, "Signal seed");
  roundtrip->add_flag("--reversible", reversible, "Integer lifting with rounding");
  roundtrip->callback(
      [&] { action = [&] { return cmd_roundtrip(path, length, seed, reversible, out); }; });

  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->add_option("example", which, "haar or identity")
      ->required()
      ->check(CLI::IsMember({"haar", "identity"}));
  demo->callback([&] { action = [&] { return cmd_demo(which, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse_error;
  }

  try {
    return action();
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_precondition(e.kind()) ? exit_precondition : exit_verify_failed;
  }
}

}  // namespace lpfb::cli
