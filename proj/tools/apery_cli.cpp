#include <CLI11.hpp>
#include <apery/apery.hpp>
#include <apery/identities.hpp>
#include <apery/json_io.hpp>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace apery;
using json = nlohmann::json;

enum class Format { text, json, csv };

constexpr int default_digit_limit = 60;
constexpr int plain_rank_limit = 12;
constexpr int extended_rank_limit = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string coeff_text(const Integer& c) { return c.get_str(); }
std::string coeff_text(const IntPoly& p) { return "(" + to_string(p) + ")"; }

template <class B, class R>
std::string lincomb_text(const LinComb<B, R>& l) {
  if (l.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : l) {
    if (!first) os << " + ";
    first = false;
    os << coeff_text(c);
    if constexpr (std::is_same_v<R, IntPoly>) os << " * ";
    if constexpr (std::is_same_v<B, Composition>)
      os << (b.empty() ? "()" : "(" + to_string(b) + ")");
    else
      os << to_string(b);
  }
  return os.str();
}

Filter parse_filter(const std::string& s) {
  static const std::map<std::string, Filter> names{{"admissible", Filter::admissible},
                                                   {"classes", Filter::classes},
                                                   {"even_entries", Filter::even_entries},
                                                   {"self_dual_classes", Filter::self_dual_classes},
                                                   {"entries_ge_2", Filter::entries_ge_2},
                                                   {"entries_le_2", Filter::entries_le_2},
                                                   {"entries_in_2_3", Filter::entries_in_2_3}};
  auto it = names.find(s);
  if (it == names.end()) throw UsageError("unknown filter: " + s);
  return it->second;
}

void check_digit_request(int digits, bool extended) {
  if (digits < 1) throw UsageError("digits must be positive");
  if (!extended && digits > default_digit_limit)
    throw UsageError("more than " + std::to_string(default_digit_limit) + " digits requires --extended");
  check_digits(digits);
}

int cmd_enumerate(int k, const std::string& filter_name, Format fmt) {
  const Filter filter = parse_filter(filter_name);
  const bool classes = filter == Filter::classes || filter == Filter::self_dual_classes;
  const auto items = enumerate(k, filter);
  auto render = [&](const Composition& a) {
    return classes ? to_string(DualityClass(a)) : (a.empty() ? std::string("()") : to_string(a));
  };
  if (fmt == Format::json) {
    json out = json::array();
    for (const auto& a : items)
      out.push_back(classes ? json_io::basis_to_json(DualityClass(a)) : json_io::basis_to_json(a));
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& a : items) std::cout << render(a) << "\n";
  }
  return 0;
}

int cmd_delta(const std::string& cls_text, const std::string& method, const std::string& ring, Format fmt) {
  const Composition a = parse_composition(cls_text);
  if (!a.admissible()) throw UsageError("class representative must be admissible: " + cls_text);
  const DualityClass c(a);
  CompLinComb<Integer> result;
  if (method == "inductive") {
    result = delta_inductive(c);
  } else if (method == "explicit") {
    result = delta_explicit(c);
  } else {
    result = delta_inductive(c);
    const auto other = delta_explicit(c);
    if (!(other == result)) {
      std::cerr << "inductive and explicit computations disagree\n";
      std::cout << json{{"inductive", json_io::to_json(result)}, {"explicit", json_io::to_json(other)}}.dump() << "\n";
      return 1;
    }
  }
  if (ring == "poly") {
    const auto p = result.map_coeffs<IntPoly>([](const Integer& x) { return IntPoly(x); });
    if (fmt == Format::json)
      std::cout << json_io::to_json(p).dump() << "\n";
    else
      std::cout << lincomb_text(p) << "\n";
  } else {
    if (fmt == Format::json)
      std::cout << json_io::to_json(result).dump() << "\n";
    else
      std::cout << lincomb_text(result) << "\n";
  }
  return 0;
}

struct RankRow {
  int k;
  std::size_t kernel_rank;
  std::vector<IntVector> basis;
  ClassIndex columns;
};

RankRow rank_row(const std::string& map, int k, bool want_basis) {
  RankRow row{k, 0, {}, {}};
  if (map == "alpha" && k == 0) return row;
  ExactMatrix m;
  if (map == "alpha") {
    auto am = alpha_matrix(k);
    m = std::move(am.matrix);
    row.columns = std::move(am.columns);
  } else {
    auto dm = delta_k_matrix(k);
    m = std::move(dm.matrix);
    row.columns = std::move(dm.columns);
  }
  if (k > plain_rank_limit) {
    row.kernel_rank = m.cols() - rank_modular(m);
  } else {
    auto kb = kernel_basis(m);
    row.kernel_rank = kb.rank();
    if (want_basis) row.basis = std::move(kb.vectors);
  }
  return row;
}

int cmd_rank_table(const std::string& map, int max_weight, bool extended, bool with_basis, Format fmt) {
  if (map != "alpha" && map != "delta") throw UsageError("--map must be alpha or delta");
  const int limit = extended ? extended_rank_limit : plain_rank_limit;
  if (max_weight > limit)
    throw UsageError("max weight " + std::to_string(max_weight) + " exceeds " + std::to_string(limit) +
                     (extended ? "" : "; use --extended"));
  const int start = map == "alpha" ? 1 : 0;
  std::vector<std::future<RankRow>> jobs;
  for (int k = start; k <= max_weight; ++k)
    jobs.push_back(std::async(std::launch::async, rank_row, map, k, with_basis));
  std::vector<RankRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  if (fmt == Format::json) {
    json out = json::array();
    for (const auto& r : rows) {
      json e{{"k", r.k}, {"rank", r.kernel_rank}};
      if (with_basis && r.k <= plain_rank_limit) {
        json b = json::array();
        for (const auto& v : r.basis) b.push_back(json_io::to_json(to_class_lincomb(v, r.columns)));
        e["kernel"] = b;
      }
      out.push_back(e);
    }
    std::cout << out.dump() << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "k,rank\n";
    for (const auto& r : rows) std::cout << r.k << "," << r.kernel_rank << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << std::setw(3) << r.k << "  " << r.kernel_rank << "\n";
      for (const auto& v : r.basis) std::cout << "     " << lincomb_text(to_class_lincomb(v, r.columns)) << "\n";
    }
  }
  return 0;
}

int cmd_eval(const std::string& sigma_text, const std::string& zeta_text, long n, int digits, bool extended,
             Format fmt) {
  check_digit_request(digits, extended);
  if (n < 0) throw UsageError("--n must be non-negative");
  ApproxReal v;
  std::string what;
  if (!sigma_text.empty()) {
    const Composition a = parse_composition(sigma_text);
    v = sigma_tail(a, n, digits);
    what = "sigma(" + to_string(a) + ")_" + std::to_string(n);
  } else {
    const Composition a = parse_composition(zeta_text);
    if (!a.admissible()) throw UsageError("zeta tails need an admissible composition");
    v = zeta_sym_tail(DualityClass(a), n, digits);
    what = "zeta(" + to_string(a) + ")_{" + std::to_string(n) + "," + std::to_string(n) + "}";
  }
  const std::string value = v.value().to_string(digits);
  const std::string err = v.error().to_string(3);
  if (fmt == Format::json)
    std::cout << json{{"quantity", what}, {"value", value}, {"abs_error", err}, {"digits", digits}}.dump() << "\n";
  else if (fmt == Format::csv)
    std::cout << "quantity,value,abs_error\n" << what << "," << value << "," << err << "\n";
  else
    std::cout << what << " = " << value << " ± " << err << "\n";
  return 0;
}

IdentityParams parse_params(const std::vector<std::string>& raw) {
  IdentityParams p;
  for (const auto& s : raw) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter must look like key=value: " + s);
    try {
      std::size_t used = 0;
      const long v = std::stol(s.substr(eq + 1), &used);
      if (used != s.size() - eq - 1) throw std::invalid_argument(s);
      p[s.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw UsageError("parameter value must be an integer: " + s);
    }
  }
  return p;
}

int cmd_verify(const std::string& name, const std::vector<std::string>& raw_params, int digits, bool extended,
               bool list, Format fmt) {
  if (list) {
    for (const auto& e : identities::registry())
      std::cout << std::left << std::setw(16) << e.name << " " << e.description << "\n";
    return 0;
  }
  if (name.empty()) throw UsageError("--identity is required");
  const auto* entry = identities::find(name);
  if (!entry) throw UsageError("unknown identity: " + name);
  if (digits < 0) digits = entry->kind == "exact" ? 0 : (extended ? 100 : entry->default_digits);
  if (entry->kind != "exact") check_digit_request(digits, extended);
  const auto report = verify_identity(name, parse_params(raw_params), digits);
  if (fmt == Format::json) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back(json{{"label", c.label}, {"pass", c.pass}, {"residual", c.residual}});
    std::cout << json{{"identity", report.name},   {"kind", report.kind},
                      {"digits", report.digits},   {"tolerance", report.tolerance},
                      {"residual", report.max_residual}, {"pass", report.pass},
                      {"checks", checks}}
                     .dump()
              << "\n";
  } else if (fmt == Format::csv) {
    std::cout << "label,pass,residual\n";
    for (const auto& c : report.checks) std::cout << "\"" << c.label << "\"," << (c.pass ? 1 : 0) << "," << c.residual << "\n";
  } else {
    for (const auto& c : report.checks)
      std::cout << (c.pass ? "  ok    " : "  FAIL  ") << c.label << "  [" << c.residual << "]\n";
    std::cout << (report.pass ? "PASS " : "FAIL ") << report.name << "  residual " << report.max_residual
              << " tolerance " << report.tolerance << "\n";
  }
  return report.pass ? 0 : 1;
}

int cmd_delta_matrix(int k, Format fmt) {
  const auto m = delta_submatrix(k);
  if (fmt == Format::json) {
    json rows = json::array(), cols = json::array();
    for (const auto& b : enumerate(k, Filter::even_entries)) rows.push_back(json_io::basis_to_json(b));
    for (const auto& a : enumerate(k, Filter::self_dual_classes)) cols.push_back(json_io::basis_to_json(DualityClass(a)));
    std::cout << json{{"weight", k}, {"rows", rows}, {"columns", cols}, {"matrix", json_io::matrix_to_json(m)}}.dump()
              << "\n";
    return 0;
  }
  if (fmt == Format::csv) {
    for (const auto& row : m) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j].get_str();
      std::cout << "\n";
    }
    return 0;
  }
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& x : row) width = std::max(width, x.get_str().size());
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << std::setw(static_cast<int>(width)) << row[j].get_str();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compositions, delta, rank tables and Apery-like sums"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));

  int weight = 0;
  std::string filter = "admissible";
  auto* en = app.add_subcommand("enumerate", "List compositions or classes of a weight");
  en->add_option("--weight", weight)->required()->check(CLI::Range(0, max_weight));
  en->add_option("--filter", filter);

  std::string cls, method = "inductive", ring = "int";
  auto* de = app.add_subcommand("delta", "Image of a class under delta");
  de->add_option("--class", cls)->required();
  de->add_option("--method", method)->check(CLI::IsMember({"inductive", "explicit", "both"}));
  de->add_option("--ring", ring)->check(CLI::IsMember({"int", "poly"}));

  std::string map = "delta";
  int max_w = 12;
  bool extended = false, with_basis = false;
  auto* rt = app.add_subcommand("rank-table", "Kernel ranks of alpha_k or delta_k");
  rt->add_option("--map", map)->check(CLI::IsMember({"alpha", "delta"}));
  rt->add_option("--max-weight", max_w)->check(CLI::Range(0, extended_rank_limit));
  rt->add_flag("--extended", extended, "Allow weights up to 16 (modular rank)");
  rt->add_flag("--kernel", with_basis, "Also print saturated kernel bases");

  std::string sigma_text, zeta_text;
  long n = 0;
  int digits = 40;
  auto* ev = app.add_subcommand("eval", "Evaluate a sigma tail or a symmetric zeta double tail");
  auto* so = ev->add_option("--sigma", sigma_text);
  auto* zo = ev->add_option("--zeta-tail", zeta_text);
  so->excludes(zo);
  ev->add_option("--n", n);
  ev->add_option("--digits", digits);
  ev->add_flag("--extended", extended);

  std::string identity;
  std::vector<std::string> params;
  int vdigits = -1;
  bool list = false;
  auto* ve = app.add_subcommand("verify", "Verify a registered identity");
  ve->add_option("--identity", identity);
  ve->add_option("--param", params, "key=value");
  ve->add_option("--digits", vdigits);
  ve->add_flag("--extended", extended);
  ve->add_flag("--list", list);

  int mweight = 0;
  auto* dm = app.add_subcommand("delta-matrix", "Matrix Delta_k on self-dual classes and even compositions");
  dm->add_option("--weight", mweight)->required();

  for (auto* sub : {en, de, rt, ev, ve, dm}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format fmt = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);
  try {
    if (*en) return cmd_enumerate(weight, filter, fmt);
    if (*de) return cmd_delta(cls, method, ring, fmt);
    if (*rt) return cmd_rank_table(map, max_w, extended, with_basis, fmt);
    if (*ev) {
      if (sigma_text.empty() == zeta_text.empty()) throw UsageError("give exactly one of --sigma or --zeta-tail");
      return cmd_eval(sigma_text, zeta_text, n, digits, extended, fmt);
    }
    if (*ve) return cmd_verify(identity, params, vdigits, extended, list, fmt);
    if (*dm) return cmd_delta_matrix(mweight, fmt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const configuration_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const capability_error& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
