#include "orthokern_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11/CLI11.hpp>
#include "json_io.hpp"

#include <orthokern/error.hpp>
#include <orthokern/parallel.hpp>
#include <orthokern/quadrature.hpp>

namespace orthokern::cli {

namespace {

using json = nlohmann::json;

enum class Mode { text, json };

struct Output {
  Mode mode = Mode::text;
  std::ostream& out;
  std::optional<std::string> csv_path;

  void write_csv(const std::string& body) const {
    if (!csv_path) {
      out << body;
      return;
    }
    std::ofstream f(*csv_path, std::ios::binary);
    if (f) f << body;
    if (!f) detail::fail("output", "cannot write CSV file '" + *csv_path + "'");
  }
};

void emit(const IdentityReport& r, const Output& o) {
  if (o.mode == Mode::json) {
    o.out << report_json(r) << '\n';
  } else {
    o.out << report_text(r);
  }
}

void emit_value(const std::string& what, const std::string& method, json params, double value,
                const Output& o) {
  if (o.mode == Mode::json) {
    o.out << json{{"kernel", what}, {"method", method}, {"params", std::move(params)},
                  {"value", value}}
                 .dump()
          << '\n';
  } else {
    o.out << what << " (" << method << ") = " << csv_number(value) << '\n';
  }
}

int resolve_order(int requested, int fallback) { return requested > 0 ? requested : fallback; }

std::vector<double> ones(std::size_t d) { return std::vector<double>(d, 1.0); }

// Command-line state. Every leaf command reads from here once parsing
// succeeded; nothing is computed during parsing.
struct State {
  bool json = false;
  int order = 0;
  unsigned threads = default_thread_count();
  std::string csv;

  int n = 0;
  int d = 0;
  int N = 0;
  int grid = 33;
  double lambda = 0.0;
  double mu = 0.0;
  double delta = 0.0;
  double r = 0.0;
  double s = 0.0;
  double t = 0.0;
  double x_scalar = 0.0;
  double y_scalar = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double lo = -1.0;
  double hi = 1.0;
  std::vector<double> lambdas;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> xs;
  std::vector<double> deltas;
  std::vector<int> degrees;
  std::vector<double> exponents;
  std::string f = "exp";
  std::string kind;
  bool closed = false;
  bool direct = false;
};

CLI::Option* list_option(CLI::App* app, const std::string& name, std::vector<double>& v,
                         const std::string& help) {
  return app->add_option(name, v, help)->delimiter(',')->expected(1, -1);
}

void add_common(CLI::App* app, State& st) {
  app->add_flag("--json", st.json, "Print one JSON object");
  app->add_option("--order", st.order, "Quadrature nodes per axis")->check(CLI::PositiveNumber);
}

void add_method(CLI::App* app, State& st) {
  auto* c = app->add_flag("--closed", st.closed, "Use the closed (integral) form");
  auto* dflag = app->add_flag("--direct", st.direct, "Use the direct sum");
  c->excludes(dflag);
}

void register_verify(CLI::App& root, State& st, std::function<int(const Output&)>& action) {
  auto* verify = root.add_subcommand("verify", "Check an identity numerically")->require_subcommand(1);

  auto* main = verify->add_subcommand("main", "Product of powers vs simplex integral");
  list_option(main, "--lambda", st.lambdas, "Exponents lambda_1..lambda_d")->required();
  list_option(main, "--x", st.x, "Point x")->required();
  main->add_option("--r", st.r, "Radius r >= 0")->required();
  add_common(main, st);
  main->callback([&] {
    action = [&](const Output& o) {
      LambdaVec lv(st.lambdas, LambdaVec::Context::simplex);
      emit(verify_main_identity(lv, st.x, st.r, resolve_order(st.order, default_order(0))), o);
      return 0;
    };
  });

  auto* poisson = verify->add_subcommand("poisson", "Two-factor Poisson kernel identity");
  poisson->add_option("--lambda", st.lambda)->required();
  poisson->add_option("--mu", st.mu)->required();
  poisson->add_option("--s", st.s)->required();
  poisson->add_option("--t", st.t)->required();
  poisson->add_option("--r", st.r)->required();
  add_common(poisson, st);
  poisson->callback([&] {
    action = [&](const Output& o) {
      emit(verify_poisson_product(st.lambda, st.mu, st.s, st.t, st.r,
                                  resolve_order(st.order, default_order(0))),
           o);
      return 0;
    };
  });

  for (const char* name : {"gegen1", "gegen2"}) {
    const bool first = std::string(name) == "gegen1";
    auto* g = verify->add_subcommand(name, first ? "C_n^lambda from C_n^(lambda+mu)"
                                                 : "Z_n^lambda from Z_n^(lambda+mu)");
    g->add_option("--n", st.n)->required();
    g->add_option("--lambda", st.lambda)->required();
    g->add_option("--mu", st.mu)->required();
    g->add_option("--x", st.x_scalar)->required();
    add_common(g, st);
    g->callback([&, first] {
      action = [&, first](const Output& o) {
        const int order = resolve_order(st.order, default_order(st.n));
        emit(first ? verify_gegen1(st.n, st.lambda, st.mu, st.x_scalar, order)
                   : verify_gegen2(st.n, st.lambda, st.mu, st.x_scalar, order),
             o);
        return 0;
      };
    });
  }

  auto* add = verify->add_subcommand("addition", "Addition formula");
  add->add_option("--n", st.n)->required();
  add->add_option("--lambda", st.lambda)->required();
  add->add_option("--mu", st.mu)->required();
  add->add_option("--theta", st.theta)->required();
  add->add_option("--phi", st.phi)->required();
  add->add_option("--t", st.t)->required();
  add->add_option("--s", st.s)->required();
  add_common(add, st);
  add->callback([&] {
    action = [&](const Output& o) {
      emit(verify_addition_formula(st.n, st.lambda, st.mu, st.theta, st.phi, st.t, st.s), o);
      return 0;
    };
  });

  auto* gen = verify->add_subcommand("generating", "Generating functions of C_n and Z_n");
  gen->add_option("--lambda", st.lambda)->required();
  gen->add_option("--r", st.r)->required();
  gen->add_option("--t", st.t)->required();
  gen->add_option("--N", st.N, "Truncation degree")->required();
  add_common(gen, st);
  gen->callback([&] {
    action = [&](const Output& o) {
      const GeneratingReports g = verify_generating(st.lambda, st.r, st.t, st.N);
      if (o.mode == Mode::json) {
        auto bound = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
        o.out << json{{"gegenbauer", report_to_json(g.gegenbauer)},
                      {"gegenbauer_tail_bound", bound(g.gegenbauer_tail_bound)},
                      {"zonal", report_to_json(g.zonal)},
                      {"zonal_tail_bound", bound(g.zonal_tail_bound)}}
                     .dump()
              << '\n';
      } else {
        o.out << report_text(g.gegenbauer) << "  tail bound = " << g.gegenbauer_tail_bound << '\n'
              << report_text(g.zonal) << "  tail bound = " << g.zonal_tail_bound << '\n';
      }
      return 0;
    };
  });

  auto* prod = verify->add_subcommand("product", "Gegenbauer product formula");
  prod->add_option("--n", st.n)->required();
  prod->add_option("--lambda", st.lambda)->required();
  prod->add_option("--x", st.x_scalar)->required();
  prod->add_option("--y", st.y_scalar)->required();
  add_common(prod, st);
  prod->callback([&] {
    action = [&](const Output& o) {
      emit(verify_product_formula(st.n, st.lambda, st.x_scalar, st.y_scalar,
                                  resolve_order(st.order, default_order(st.n))),
           o);
      return 0;
    };
  });

  auto* hg = verify->add_subcommand("hermite-genocchi", "Divided difference vs simplex integral");
  list_option(hg, "--xs", st.xs, "Distinct nodes")->required();
  hg->add_option("--f", st.f, "exp, sin, cos or pow:K");
  add_common(hg, st);
  hg->callback([&] {
    action = [&](const Output& o) {
      const SmoothFunction fn = SmoothFunction::parse(st.f);
      emit(verify_hermite_genocchi(st.xs, fn, resolve_order(st.order, default_order(0))), o);
      return 0;
    };
  });
}

json point_json(const std::vector<double>& p) { return json(p); }

void register_kernel(CLI::App& root, State& st, std::function<int(const Output&)>& action) {
  auto* kernel = root.add_subcommand("kernel", "Evaluate a reproducing kernel")->require_subcommand(1);

  auto* cube = kernel->add_subcommand("cube", "Product Gegenbauer weight on the cube");
  cube->add_option("--n", st.n)->required();
  list_option(cube, "--lambda", st.lambdas, "lambda_1..lambda_d")->required();
  list_option(cube, "--x", st.x, "Point x")->required();
  list_option(cube, "--y", st.y, "Point y (default: the vertex (1,...,1))");
  add_method(cube, st);
  add_common(cube, st);
  cube->callback([&] {
    action = [&](const Output& o) {
      CubeWeight w(st.lambdas);
      const std::vector<double> y = st.y.empty() ? ones(st.lambdas.size()) : st.y;
      json params{{"n", st.n}, {"lambda", st.lambdas}, {"x", st.x}, {"y", y}};
      if (st.closed) {
        detail::require(std::all_of(y.begin(), y.end(), [](double v) { return v == 1.0; }),
                        "kernel cube", "the closed form is available only at y = (1,...,1)");
        const int order = resolve_order(st.order, default_order(st.n));
        params["order"] = order;
        emit_value("cube", "closed", params, kernel_cube_at_one_closed(st.n, w, st.x, order), o);
      } else {
        emit_value("cube", "direct", params, kernel_cube_direct(st.n, w, st.x, y), o);
      }
      return 0;
    };
  });

  auto* ball = kernel->add_subcommand("ball", "Weight ||x||^(2 lambda)(1-||x||^2)^(mu-1/2) on the ball");
  ball->add_option("--n", st.n)->required();
  ball->add_option("--d", st.d)->required();
  ball->add_option("--lambda", st.lambda)->required();
  ball->add_option("--mu", st.mu)->required();
  list_option(ball, "--x", st.x, "Point x")->required();
  list_option(ball, "--y", st.y, "Point y")->required();
  add_method(ball, st);
  add_common(ball, st);
  ball->callback([&] {
    action = [&](const Output& o) {
      BallWeight w(st.d, st.lambda, st.mu);
      json params{{"n", st.n}, {"d", st.d}, {"lambda", st.lambda}, {"mu", st.mu},
                  {"x", point_json(st.x)}, {"y", point_json(st.y)}};
      if (st.closed) {
        const int order = resolve_order(st.order, ball_default_order(st.n));
        params["order"] = order;
        emit_value("ball", "closed", params, kernel_ball_integral(st.n, w, st.x, st.y, order), o);
      } else {
        emit_value("ball", "direct", params, kernel_ball_direct(st.n, w, st.x, st.y), o);
      }
      return 0;
    };
  });
}

void register_cesaro(CLI::App& root, State& st, std::function<int(const Output&)>& action) {
  auto* ces = root.add_subcommand("cesaro", "Evaluate a Cesaro (C, delta) kernel")->require_subcommand(1);

  auto* gg = ces->add_subcommand("gegenbauer", "One-dimensional Gegenbauer kernel");
  gg->add_option("--n", st.n)->required();
  gg->add_option("--delta", st.delta)->required();
  gg->add_option("--lambda", st.lambda)->required();
  gg->add_option("--s", st.s)->required();
  gg->add_option("--t", st.t)->required();
  add_common(gg, st);
  gg->callback([&] {
    action = [&](const Output& o) {
      json params{{"n", st.n}, {"delta", st.delta}, {"lambda", st.lambda}, {"s", st.s}, {"t", st.t}};
      emit_value("cesaro-gegenbauer", "direct", params,
                 cesaro_kernel_gegenbauer(CesaroSpec(st.n, st.delta), st.lambda, st.s, st.t), o);
      return 0;
    };
  });

  auto* cube = ces->add_subcommand("cube", "Cube kernel at the vertex (1,...,1)");
  cube->add_option("--n", st.n)->required();
  cube->add_option("--delta", st.delta)->required();
  list_option(cube, "--lambda", st.lambdas, "lambda_1..lambda_d")->required();
  list_option(cube, "--x", st.x, "Point x")->required();
  add_method(cube, st);
  add_common(cube, st);
  cube->callback([&] {
    action = [&](const Output& o) {
      CubeWeight w(st.lambdas);
      const CesaroSpec spec(st.n, st.delta);
      json params{{"n", st.n}, {"delta", st.delta}, {"lambda", st.lambdas}, {"x", st.x}};
      if (st.closed) {
        const int order = resolve_order(st.order, default_order(st.n));
        params["order"] = order;
        emit_value("cesaro-cube", "closed", params, cesaro_kernel_cube_at_one(spec, w, st.x, order), o);
      } else {
        emit_value("cesaro-cube", "direct", params,
                   cesaro_kernel_cube_direct(spec, w, st.x, ones(st.lambdas.size())), o);
      }
      return 0;
    };
  });

  auto* ball = ces->add_subcommand("ball", "Ball kernel");
  ball->add_option("--n", st.n)->required();
  ball->add_option("--delta", st.delta)->required();
  ball->add_option("--d", st.d)->required();
  ball->add_option("--lambda", st.lambda)->required();
  ball->add_option("--mu", st.mu)->required();
  list_option(ball, "--x", st.x, "Point x")->required();
  list_option(ball, "--y", st.y, "Point y")->required();
  add_method(ball, st);
  add_common(ball, st);
  ball->callback([&] {
    action = [&](const Output& o) {
      BallWeight w(st.d, st.lambda, st.mu);
      const CesaroSpec spec(st.n, st.delta);
      json params{{"n", st.n}, {"delta", st.delta}, {"d", st.d}, {"lambda", st.lambda},
                  {"mu", st.mu}, {"x", st.x}, {"y", st.y}};
      if (st.closed) {
        const int order = resolve_order(st.order, ball_default_order(st.n));
        params["order"] = order;
        emit_value("cesaro-ball", "closed", params, cesaro_kernel_ball(spec, w, st.x, st.y, order), o);
      } else {
        emit_value("cesaro-ball", "direct", params, cesaro_kernel_ball_direct(spec, w, st.x, st.y), o);
      }
      return 0;
    };
  });
}

void register_scans(CLI::App& root, State& st, std::function<int(const Output&)>& action) {
  auto* scan = root.add_subcommand("scan", "Grid scans")->require_subcommand(1);
  auto* nonneg = scan->add_subcommand("cube-nonneg", "Minimum of K_n^delta(W; x, 1) on a grid");
  nonneg->add_option("--n", st.n)->required();
  nonneg->add_option("--delta", st.delta)->required();
  list_option(nonneg, "--lambda", st.lambdas, "lambda_1..lambda_d")->required();
  nonneg->add_option("--grid", st.grid, "Points per axis")->capture_default_str();
  nonneg->add_option("--csv", st.csv, "Write the grid rows to this file");
  nonneg->add_option("--threads", st.threads, "Worker threads")->check(CLI::PositiveNumber);
  nonneg->add_flag("--json", st.json, "Print a JSON summary instead of CSV rows");
  nonneg->callback([&] {
    action = [&](const Output& o) {
      const CubeScan s = nonnegativity_scan(CesaroSpec(st.n, st.delta), CubeWeight(st.lambdas),
                                            st.grid, st.threads);
      if (o.mode == Mode::json) {
        if (o.csv_path) o.write_csv(scan_csv(s));
        o.out << json{{"min_value", s.min_value},
                      {"argmin", s.argmin},
                      {"params", {{"n", st.n}, {"delta", st.delta}, {"lambda", st.lambdas}, {"grid", st.grid}}}}
                     .dump()
              << '\n';
      } else {
        o.write_csv(scan_csv(s));
        if (o.csv_path) o.out << "min " << csv_number(s.min_value) << '\n';
      }
      return 0;
    };
  });

  auto* sweep = root.add_subcommand("sweep", "Parameter sweeps")->require_subcommand(1);
  auto* crit = sweep->add_subcommand("critical", "Lebesgue function at the origin over (delta, n)");
  crit->add_option("--d", st.d)->required();
  crit->add_option("--lambda", st.lambda)->required();
  crit->add_option("--mu", st.mu)->required();
  list_option(crit, "--deltas", st.deltas, "Cesaro orders")->required();
  crit->add_option("--degrees", st.degrees, "Degrees n")->delimiter(',')->expected(1, -1)->required();
  crit->add_option("--csv", st.csv, "Write the table to this file");
  crit->add_option("--threads", st.threads, "Worker threads")->check(CLI::PositiveNumber);
  crit->callback([&] {
    action = [&](const Output& o) {
      const auto rows =
          critical_index_sweep(BallWeight(st.d, st.lambda, st.mu), st.deltas, st.degrees, st.threads);
      o.write_csv(sweep_csv(rows));
      return 0;
    };
  });
}

void register_quad(CLI::App& root, State& st, std::function<int(const Output&)>& action) {
  auto* quad = root.add_subcommand("quad", "Quadrature rules")->require_subcommand(1);
  auto* dump = quad->add_subcommand("dump", "Print a rule as JSON");
  dump->add_option("--kind", st.kind, "jacobi, beta, legendre, simplex, cube or ball")
      ->required()
      ->check(CLI::IsMember({"jacobi", "beta", "legendre", "simplex", "cube", "ball"}));
  dump->add_option("--n", st.n, "Nodes per axis")->required();
  dump->add_option("--alpha", st.alpha);
  dump->add_option("--beta", st.beta);
  dump->add_option("--a", st.a);
  dump->add_option("--b", st.b);
  dump->add_option("--lo", st.lo);
  dump->add_option("--hi", st.hi);
  list_option(dump, "--exponents", st.exponents, "Simplex exponents");
  list_option(dump, "--lambda", st.lambdas, "Cube indices, or the ball lambda");
  dump->add_option("--mu", st.mu);
  dump->add_option("--d", st.d);
  dump->add_flag("--json", st.json, "Accepted for symmetry; output is always JSON");
  dump->callback([&] {
    action = [&](const Output& o) {
      json j;
      auto one_d = [&](const QuadRule1D& r) {
        j = {{"kind", st.kind}, {"params", r.weight.params}, {"nodes", r.nodes},
             {"weights", r.weights}, {"exactness", r.exactness}};
      };
      auto multi = [&](const PointSet& p, const std::vector<double>& params, int exactness) {
        json nodes = json::array();
        for (std::size_t i = 0; i < p.size(); ++i) {
          const auto pt = p.point(i);
          nodes.push_back(std::vector<double>(pt.begin(), pt.end()));
        }
        j = {{"kind", st.kind}, {"params", params}, {"nodes", nodes}, {"weights", p.weights},
             {"exactness", exactness}};
      };
      if (st.kind == "jacobi") {
        one_d(gauss_jacobi(st.n, st.alpha, st.beta));
      } else if (st.kind == "beta") {
        one_d(beta_rule(st.n, st.a, st.b));
      } else if (st.kind == "legendre") {
        one_d(legendre_rule(st.n, st.lo, st.hi));
      } else if (st.kind == "simplex") {
        const SimplexRule r = simplex_rule(static_cast<int>(st.exponents.size()), st.exponents, st.n);
        multi(r, r.exponents, r.exactness);
      } else if (st.kind == "cube") {
        const CubeRule r = cube_rule(st.lambdas, st.n);
        multi(r, r.lambdas, r.exactness);
      } else {
        detail::require(st.lambdas.size() == 1, "quad dump", "ball rules take a single --lambda");
        const BallRule r = ball_rule(st.d, st.lambdas[0], st.mu, st.n);
        multi(r, {r.lambda, r.mu}, r.exactness);
      }
      o.out << j.dump() << '\n';
      return 0;
    };
  });
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reproducing and Cesaro kernels for Gegenbauer-type weights", "orthokern"};
  app.require_subcommand(1);
  State st;
  std::function<int(const Output&)> action;

  register_verify(app, st, action);
  register_kernel(app, st, action);
  register_cesaro(app, st, action);
  register_scans(app, st, action);
  register_quad(app, st, action);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return static_cast<int>(ExitCode::ok);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage_error);
  }

  if (!action) {
    err << "usage error: no command given\n";
    return static_cast<int>(ExitCode::usage_error);
  }

  Output o{st.json ? Mode::json : Mode::text, out, std::nullopt};
  if (!st.csv.empty()) o.csv_path = st.csv;
  try {
    return action(o);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::domain_error);
  }
}

}  // namespace orthokern::cli
