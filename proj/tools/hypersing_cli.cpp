// hypersing: solves the packaged problems and writes solution tables.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypersing/problems.hpp"
#include "hypersing/spectral.hpp"

namespace {

using hypersing::Complex;
constexpr double pi = std::numbers::pi;

struct Config {
  double a = -1.0, b = 1.0;
  int n = 40;
  double A = 3.0;
  double sigma0 = 1.0, mu = 1.0, nu = 0.3, half = 1.0;
  double k = 1.0;
  double tol = 1e-10;
  int m = 64;
  int N = 32;
  int mquad = 128;
  int threads = 1;
  bool normalize = false;
  std::optional<double> screen_k;
  std::string output;
  std::string format = "csv";
};

struct Table {
  bool complex = false;
  std::vector<double> x;
  std::vector<Complex> numeric, exact;
  std::optional<double> condition;
};

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string render(const Table& t, char sep) {
  std::ostringstream out;
  if (t.complex)
    out << "x" << sep << "numeric_re" << sep << "numeric_im" << sep << "exact_re" << sep << "exact_im" << sep
        << "abs_error\n";
  else
    out << "x" << sep << "numeric" << sep << "exact" << sep << "abs_error\n";
  for (std::size_t r = 0; r < t.x.size(); ++r) {
    const Complex u = t.numeric[r], e = t.exact[r];
    out << fmt(t.x[r]) << sep << fmt(u.real());
    if (t.complex) out << sep << fmt(u.imag());
    out << sep << fmt(e.real());
    if (t.complex) out << sep << fmt(e.imag());
    out << sep << fmt(std::abs(u - e)) << '\n';
  }
  return out.str();
}

template <class Scalar, class Exact>
Table tabulate(const hypersing::DiscreteSolution<Scalar>& sol, Exact&& exact, Complex scale = 1.0) {
  Table t;
  t.complex = std::is_same_v<Scalar, Complex>;
  const auto values = sol.at_nodes();
  for (int j = 1; j <= sol.mesh().n(); ++j) {
    const double x = sol.mesh().node(j);
    t.x.push_back(x);
    t.numeric.push_back(Complex(values[j - 1]) / scale);
    t.exact.push_back(Complex(exact(x)) / scale);
  }
  t.condition = sol.condition_estimate();
  return t;
}

hypersing::SpectralOptions spectral_options(const Config& c, double a, double b) {
  return {c.N, c.mquad, a, b, c.threads};
}

Table run_characteristic(const Config& c) {
  const auto mesh = hypersing::make_mesh(c.a, c.b, c.n);
  const auto sol = hypersing::solve_characteristic(mesh, hypersing::constant_rhs<double>(-pi));
  return tabulate(sol, [&](double x) { return std::sqrt((x - c.a) * (c.b - x)); });
}

Table run_full(const Config& c) {
  hypersing::FullProblem<double> p{hypersing::make_mesh(c.a, c.b, c.n), hypersing::constant_rhs<double>(-pi),
                                   hypersing::polynomial_kernel(c.A)};
  const auto sol = hypersing::solve_full(p);
  if (c.a == -1.0 && c.b == 1.0)
    return tabulate(sol, [&](double x) { return hypersing::full_example_exact(c.A, x); });
  const auto oracle = hypersing::solve_spectral(p.kernel, p.rhs, spectral_options(c, c.a, c.b));
  return tabulate(sol, oracle);
}

Table run_crack(const Config& c) {
  const hypersing::CrackParams params{c.sigma0, c.mu, c.nu, c.half};
  const auto sol = hypersing::solve_full(hypersing::crack_problem(params, c.n));
  return tabulate(sol, [&](double x) { return hypersing::crack_exact(c.sigma0, c.mu, c.nu, c.half, x); });
}

Table run_screen(const hypersing::ScreenParams& params, const Config& c, bool normalize) {
  const auto p = hypersing::screen_problem(params, c.n, c.tol);
  const auto sol = hypersing::solve_full(p);
  const auto oracle = hypersing::solve_spectral(p.kernel, p.rhs, spectral_options(c, -params.a, params.a));
  return tabulate(sol, oracle, normalize ? hypersing::screen_normalization(params) : Complex(1.0));
}

Table run_finite_part(const Config& c) {
  // Density sqrt((t-a)(b-t)); its finite part is -pi everywhere inside.
  const double a = c.a, b = c.b;
  const hypersing::Density<double> phi{
      [=](double t) { return std::sqrt(std::max(0.0, (t - a) * (b - t))); },
      [=](double t) { return (0.5 * (a + b) - t) / std::sqrt((t - a) * (b - t)); }, std::nullopt};
  const hypersing::Mesh mesh = hypersing::make_mesh(a, b, c.n);
  Table t;
  for (int i = 1; i <= c.n; ++i) {
    const double x = mesh.colloc(i);
    t.x.push_back(x);
    t.numeric.push_back(hypersing::finite_part(phi, a, b, x, {c.tol, 10000}));
    t.exact.push_back(-pi);
  }
  return t;
}

Table run_spectral_compare(const Config& c) {
  if (c.screen_k) return run_screen({*c.screen_k, c.half}, c, c.normalize);
  hypersing::FullProblem<double> p{hypersing::make_mesh(-c.half, c.half, c.n),
                                   hypersing::constant_rhs<double>(-pi), hypersing::polynomial_kernel(c.A)};
  const auto sol = hypersing::solve_full(p);
  return tabulate(sol, hypersing::solve_spectral(p.kernel, p.rhs, spectral_options(c, -c.half, c.half)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collocation solver for hypersingular integral equations on an interval"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "number of cells")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", c.output, "output file (default stdout)");
    sub->add_option("--format", c.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
  };
  auto interval = [&](CLI::App* sub) {
    sub->add_option("--a", c.a, "left endpoint");
    sub->add_option("--b", c.b, "right endpoint");
  };
  auto spectral = [&](CLI::App* sub) {
    sub->add_option("--N", c.N, "Chebyshev modes in the oracle")->check(CLI::PositiveNumber);
    sub->add_option("--mquad", c.mquad, "oracle quadrature nodes")->check(CLI::PositiveNumber);
    sub->add_option("--threads", c.threads, "oracle assembly threads")->check(CLI::PositiveNumber);
  };

  auto* characteristic = app.add_subcommand("characteristic", "f' = -pi with K0 = 0");
  common(characteristic);
  interval(characteristic);

  auto* full = app.add_subcommand("full", "f' = -pi with K0 = A(x-t)");
  common(full);
  interval(full);
  spectral(full);
  full->add_option("--A", c.A, "kernel coefficient");

  auto* crack = app.add_subcommand("crack", "crack under uniform load on (-a, a)");
  common(crack);
  crack->add_option("--a", c.half, "half-length")->check(CLI::PositiveNumber);
  crack->add_option("--sigma0", c.sigma0, "applied load");
  crack->add_option("--mu", c.mu, "shear modulus");
  crack->add_option("--nu", c.nu, "Poisson ratio");

  auto* screen = app.add_subcommand("screen", "rigid screen on (-a, a), spectral oracle");
  common(screen);
  spectral(screen);
  screen->add_option("--k", c.k, "wavenumber");
  screen->add_option("--a", c.half, "half-length")->check(CLI::PositiveNumber);
  screen->add_option("--tol", c.tol, "kernel tolerance");
  screen->add_flag("--normalize", c.normalize, "divide by -pi i k");

  auto* fp = app.add_subcommand("finite-part", "finite part of sqrt((t-a)(b-t))/(x-t)^2 at the cell midpoints");
  common(fp);
  interval(fp);
  fp->add_option("--tol", c.tol, "quadrature tolerance");

  auto* compare = app.add_subcommand("spectral-compare", "collocation against the spectral solver");
  common(compare);
  spectral(compare);
  compare->add_option("--a", c.half, "half-length")->check(CLI::PositiveNumber);
  compare->add_option("--A", c.A, "polynomial kernel coefficient");
  compare->add_option("--k", c.screen_k, "screen wavenumber (replaces --A)");
  compare->add_option("--tol", c.tol, "kernel tolerance");
  compare->add_flag("--normalize", c.normalize, "divide screen values by -pi i k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (const char* env = std::getenv("HYPERSING_THREADS")) {
    const std::string s(env);
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 1) {
      std::cerr << "error: HYPERSING_THREADS must be a positive integer\n";
      return 2;
    }
    c.threads = v;
  }

  std::string name;
  Table table;
  try {
    if (characteristic->parsed()) name = "characteristic", table = run_characteristic(c);
    else if (full->parsed()) name = "full", table = run_full(c);
    else if (crack->parsed()) name = "crack", table = run_crack(c);
    else if (screen->parsed()) name = "screen", table = run_screen({c.k, c.half}, c, c.normalize);
    else if (fp->parsed()) name = "finite-part", table = run_finite_part(c);
    else name = "spectral-compare", table = run_spectral_compare(c);
  } catch (const hypersing::Error& e) {
    std::cerr << "error: " << hypersing::to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  }

  const std::string text = render(table, c.format == "tsv" ? '\t' : ',');
  if (c.output.empty()) {
    std::cout << text << std::flush;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    file << text;
    if (!file) {
      std::cerr << "error: file-io: cannot write " << c.output << '\n';
      return 1;
    }
  }

  double worst = 0.0;
  for (std::size_t r = 0; r < table.x.size(); ++r) worst = std::max(worst, std::abs(table.numeric[r] - table.exact[r]));
  std::cerr << name << ": n=" << table.x.size() << " max_abs_error=" << fmt(worst) << " condition_estimate="
            << (table.condition ? fmt(*table.condition) : std::string("n/a")) << '\n';
  return 0;
}
