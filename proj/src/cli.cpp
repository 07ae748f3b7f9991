#include "sasaki/cli.hpp"

#include "sasaki/csc.hpp"
#include "sasaki/curvature.hpp"
#include "sasaki/extremal.hpp"
#include "sasaki/region.hpp"
#include "sasaki/serialize.hpp"
#include "sasaki/topology.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace sasaki::cli {

namespace {

constexpr const char* kSchema = "sasaki/1";

BundleType parse_bundle(const std::string& s) {
  if (s == "trivial") return BundleType::Trivial;
  if (s == "nontrivial") return BundleType::NonTrivial;
  throw std::invalid_argument("bundle must be 'trivial' or 'nontrivial'");
}

std::pair<long long, long long> parse_pair(const std::string& s, const char* what) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument(std::string(what) + " must be a comma pair like 12,1");
  try {
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " must be a comma pair like 12,1");
  }
}

// Ray selection: --v v1,v2 or --c p/q (slope c = v2/v1).
WeightVector ray_from_flags(const std::string& v_flag, const std::string& c_flag) {
  if (!v_flag.empty() && !c_flag.empty())
    throw std::invalid_argument("give either --v or --c, not both");
  if (!v_flag.empty()) {
    auto [v1, v2] = parse_pair(v_flag, "--v");
    return make_weight_vector(v1, v2);
  }
  if (!c_flag.empty()) return weight_from_slope(parse_rational(c_flag));
  throw std::invalid_argument("a ray is required: pass --v v1,v2 or --c p/q");
}

void emit(std::ostream& out, const std::string& format, const Json& j,
          const std::string& table) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else
    out << table;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

struct ScanRow {
  long long g, k, m;
  BundleType bundle;
  std::string cells;  // pre-rendered CSV tail: l,w1,w2,verdict,csc_root,A,B
};

std::string scan_cells(long long g, long long k, long long m, BundleType bundle) {
  LW lw = params_from_km(k, m, bundle);
  JoinParams params = make_join_params(g, lw.l, lw.w1, lw.w2);
  RegularRayResult reg = regular_ray_extremal(g, k, m, bundle);
  CscRay csc = csc_ray(params);

  std::string root, a, b;
  if (std::holds_alternative<Rational>(csc.root)) {
    root = to_string(std::get<Rational>(csc.root));
    // A and B stay empty on the product ray (w = (1, 1)), where the
    // admissible scalar curvature formulas are undefined.
    if (auto report = sasaki_scalar(params, *csc.v)) {
      a = report->A.to_string();
      b = report->B.to_string();
    }
  } else {
    // Irrational root: decimal presentation; A and B are left empty since
    // they are not rational multiples of pi here.
    root = decimal12(std::get<IsolatingInterval>(csc.root).approx());
  }

  std::ostringstream os;
  os << lw.l << ',' << lw.w1 << ',' << lw.w2 << ',' << to_string(reg.verdict.strength)
     << ',' << csv_field(root) << ',' << csv_field(a) << ',' << csv_field(b);
  return os.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal assertion failed: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for extremal Sasakian structures on "
               "S^3-bundles over Riemann surfaces"};
  app.require_subcommand(1);

  long long g = 0, l = 1, k = 0, m = 0, bound = 100;
  long long g_min = 2, g_max = 5, k_min = 1, k_max = 4;
  unsigned jobs = 1;
  std::string w_flag, v_flag, c_flag, bundle_flag = "trivial";
  std::string format = "table", out_path = "-";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };
  auto add_join = [&](CLI::App* cmd) {
    cmd->add_option("--g", g, "genus (>= 1)")->required();
    cmd->add_option("--l", l, "join parameter l (>= 1)");
    cmd->add_option("--w", w_flag, "weights w1,w2")->required();
  };
  auto add_ray = [&](CLI::App* cmd) {
    cmd->add_option("--v", v_flag, "ray weights v1,v2");
    cmd->add_option("--c", c_flag, "ray slope c = v2/v1 as p/q");
  };

  auto* classify = app.add_subcommand("classify", "contact invariants of a join");
  add_join(classify);
  add_ray(classify);
  add_format(classify);

  auto* bouquet = app.add_subcommand("bouquet", "bouquet table for fixed (g, k)");
  bouquet->add_option("--g", g, "genus")->required();
  bouquet->add_option("--k", k, "k (>= 1)")->required();
  bouquet->add_option("--bundle", bundle_flag, "trivial or nontrivial");
  add_format(bouquet);

  auto* csc = app.add_subcommand("csc", "unique CSC ray of the Sasaki cone");
  add_join(csc);
  add_format(csc);

  auto* extremal = app.add_subcommand(
      "extremal", "extremality of a ray; regular ray via --k/--m/--bundle");
  extremal->add_option("--g", g, "genus")->required();
  extremal->add_option("--l", l, "join parameter l");
  extremal->add_option("--w", w_flag, "weights w1,w2");
  extremal->add_option("--k", k, "regular-ray k");
  extremal->add_option("--m", m, "regular-ray m");
  extremal->add_option("--bundle", bundle_flag, "trivial or nontrivial");
  add_ray(extremal);
  add_format(extremal);

  auto* region = app.add_subcommand("region", "extremal region in the slope c");
  add_join(region);
  add_format(region);

  auto* curvature = app.add_subcommand("curvature", "scalar curvature of a ray");
  add_join(curvature);
  add_ray(curvature);
  add_format(curvature);

  auto* nullscalar = app.add_subcommand("null-scalar", "rays with Sasaki scalar -4");
  nullscalar->add_option("--g", g, "genus (>= 2)")->required();
  nullscalar->add_option("--bound", bound, "search bound on l and w1");
  add_format(nullscalar);

  auto* scan = app.add_subcommand("scan", "CSV sweep over a (g, k, m, bundle) grid");
  scan->add_option("--g-min", g_min, "minimum genus");
  scan->add_option("--g-max", g_max, "maximum genus");
  scan->add_option("--k-min", k_min, "minimum k");
  scan->add_option("--k-max", k_max, "maximum k");
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", out_path, "output file, '-' for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (classify->parsed()) {
    auto [w1, w2] = parse_pair(w_flag, "--w");
    JoinParams params = make_join_params(g, l, w1, w2);
    ContactInvariants ci = contact_invariants(params);
    Json j{{"schema", kSchema}, {"command", "classify"}, {"invariants", jsonify(ci)}};
    std::ostringstream table;
    table << "c1 = " << ci.c1_coefficient << "*gamma  bundle = " << to_string(ci.bundle_type)
          << "  k = " << ci.k << "  m = " << ci.m << "  n = " << ci.n << "\n";
    if (!v_flag.empty() || !c_flag.empty()) {
      WeightVector v = ray_from_flags(v_flag, c_flag);
      auto orb = quotient_orbifold(params, v);
      if (orb) {
        j["quotient"] = jsonify(*orb);
        table << "quotient: n = " << orb->n << "  r = " << to_string(orb->r)
              << "  (p, q) = (" << orb->p << ", " << orb->q << ")  s_sigma = "
              << to_string(orb->s_sigma) << "  k = " << orb->k << "\n";
      } else {
        j["quotient"] = "ProductRay";
        table << "quotient: product ray (v = w)\n";
      }
      ExtremalVerdict verdict = ray_verdict(params, v);
      j["verdict"] = jsonify(verdict);
      table << "verdict: " << to_string(verdict.strength) << "\n";
    }
    emit(out, format, j, table.str());
    return 0;
  }

  if (bouquet->parsed()) {
    BundleType b = parse_bundle(bundle_flag);
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    BouquetTable table = bouquet_table(g, k, b);
    Json j{{"schema", kSchema}, {"command", "bouquet"}, {"table", jsonify(table)}};
    std::ostringstream text;
    text << " m | l | w\n---+---+------\n";
    for (const auto& row : table.rows)
      text << " " << row.m << " | " << row.l << " | (" << row.w1 << "," << row.w2 << ")\n";
    text << "c1 = " << table.c1_coefficient << "*gamma, bundle "
         << to_string(table.bundle) << "\n";
    if (!table.bouquet_asserted)
      text << "note: tori non-conjugacy is not asserted for the non-trivial bundle\n";
    emit(out, format, j, text.str());
    return 0;
  }

  if (csc->parsed()) {
    auto [w1, w2] = parse_pair(w_flag, "--w");
    CscRay ray = csc_ray(make_join_params(g, l, w1, w2));
    Json j{{"schema", kSchema}, {"command", "csc"}};
    Json ray_json = jsonify(ray);
    for (auto& [key, value] : ray_json.items()) j[key] = value;
    std::ostringstream text;
    text << "cubic: " << ray.cubic.to_string("c") << "\n"
         << "root: " << pretty_algebraic(ray.root) << "\n"
         << "regularity: " << to_string(ray.regularity) << "\n";
    if (ray.v) text << "v = (" << ray.v->v1 << ", " << ray.v->v2 << ")\n";
    emit(out, format, j, text.str());
    return 0;
  }

  if (extremal->parsed()) {
    Json j{{"schema", kSchema}, {"command", "extremal"}};
    std::ostringstream text;
    if (w_flag.empty()) {
      // Regular-ray mode in (k, m) coordinates.
      if (k <= 0) throw std::invalid_argument("regular-ray mode needs --k and --m");
      RegularRayResult result = regular_ray_extremal(g, k, m, parse_bundle(bundle_flag));
      j["verdict"] = jsonify(result.verdict);
      j["M"] = result.M.str();
      text << "verdict: " << to_string(result.verdict.strength) << "\n"
           << "M = " << result.M.str() << "\n";
      if (result.verdict.min_location)
        text << "min of h at z = " << to_string(*result.verdict.min_location) << "\n";
    } else {
      auto [w1, w2] = parse_pair(w_flag, "--w");
      JoinParams params = make_join_params(g, l, w1, w2);
      WeightVector v = ray_from_flags(v_flag, c_flag);
      ExtremalVerdict verdict = ray_verdict(params, v);
      j["verdict"] = jsonify(verdict);
      auto prof = extremal_profile(params, v);
      if (prof) j["h"] = jsonify(prof->h);
      text << "verdict: " << to_string(verdict.strength) << "\n";
      if (prof) text << "h(z) = " << prof->h.to_string() << "\n";
      if (verdict.min_location)
        text << "min of h at z = " << to_string(*verdict.min_location) << "\n";
    }
    emit(out, format, j, text.str());
    return 0;
  }

  if (region->parsed()) {
    auto [w1, w2] = parse_pair(w_flag, "--w");
    RegionReport report = extremal_region(make_join_params(g, l, w1, w2));
    Json j{{"schema", kSchema}, {"command", "region"}};
    Json report_json = jsonify(report);
    for (auto& [key, value] : report_json.items()) j[key] = value;
    std::ostringstream text;
    for (const auto& piece : report.pieces)
      text << pretty_piece(piece) << "  " << to_string(piece.verdict) << "\n";
    for (const auto& point : report.points)
      text << "c = " << pretty_algebraic(point.value) << "  " << to_string(point.kind)
           << "  root of " << point.defining_poly.to_string("c") << "\n";
    emit(out, format, j, text.str());
    return 0;
  }

  if (curvature->parsed()) {
    auto [w1, w2] = parse_pair(w_flag, "--w");
    JoinParams params = make_join_params(g, l, w1, w2);
    WeightVector v = ray_from_flags(v_flag, c_flag);
    auto report = sasaki_scalar(params, v);
    Json j{{"schema", kSchema}, {"command", "curvature"}};
    std::ostringstream text;
    if (!report) {
      j["product_ray"] = true;
      text << "product ray (v = w): admissible scalar curvature formulas undefined\n";
    } else {
      Json report_json = jsonify(*report);
      for (auto& [key, value] : report_json.items()) j[key] = value;
      text << "transverse scalar: (" << report->A.to_string() << ") + ("
           << report->B.to_string() << ")*z\n";
      if (report->sasaki_const)
        text << "sasaki scalar: " << report->sasaki_const->to_string() << "  ["
             << to_string(*report->type) << "]\n";
    }
    emit(out, format, j, text.str());
    return 0;
  }

  if (nullscalar->parsed()) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    auto solutions = null_scalar_solutions(g, bound);
    Json arr = Json::array();
    for (const auto& sol : solutions) arr.push_back(jsonify(sol));
    Json j{{"schema", kSchema}, {"command", "null-scalar"}, {"solutions", arr}};
    std::ostringstream text;
    for (const auto& sol : solutions)
      text << "l = " << sol.l << "  w = (" << sol.w1 << "," << sol.w2 << ")  v = ("
           << sol.v.v1 << "," << sol.v.v2 << ")  " << to_string(sol.bundle) << "\n";
    if (g == 2) {
      j["note"] = "A cannot vanish for genus 2";
      text << "none: A cannot vanish for genus 2\n";
    } else if (solutions.empty()) {
      text << "none found within the bound (existence beyond this construction is open)\n";
    }
    emit(out, format, j, text.str());
    return 0;
  }

  if (scan->parsed()) {
    if (g_min < 1 || g_min > g_max || k_min < 1 || k_min > k_max)
      throw std::invalid_argument("scan ranges must satisfy 1 <= min <= max");
    std::vector<ScanRow> rows;
    for (long long gg = g_min; gg <= g_max; ++gg)
      for (long long kk = k_min; kk <= k_max; ++kk)
        for (long long mm = 0; mm < kk; ++mm)
          for (BundleType b : {BundleType::Trivial, BundleType::NonTrivial})
            rows.push_back(ScanRow{gg, kk, mm, b, {}});

    // Fan out over a shared index; rows are written in order afterwards, so
    // the output is identical for any job count.
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
        try {
          rows[i].cells = scan_cells(rows[i].g, rows[i].k, rows[i].m, rows[i].bundle);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::ofstream file;
    std::ostream* sink = &out;
    if (out_path != "-") {
      file.open(out_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
      sink = &file;
    }
    *sink << "g,k,m,bundle,l,w1,w2,verdict,csc_root,A,B\n";
    for (const auto& row : rows)
      *sink << row.g << ',' << row.k << ',' << row.m << ','
            << to_string(row.bundle) << ',' << row.cells << "\n";
    return 0;
  }

  err << "no subcommand given\n";
  return 2;
}

}  // namespace

}  // namespace sasaki::cli
