// Command-line front end for the exact forcing-certificate engine.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pompeiu/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pompeiu::ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const pompeiu::RunResult& result, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << result.document;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw pompeiu::ParseError("cannot write file '" + out_path + "'");
  out << result.document;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact forcing certificates for weighted point-tuple equations"};
  app.require_subcommand(1);

  std::string config_path, in_path, out_path, instance_path, system_path;
  std::string base, weights, target, translations, dilations, exponents;
  long c_param = 2, n_param = 2, discriminant = 0;
  std::size_t k_param = 2, size_param = 8, d_colors = 2, m_param = 1,
              samples = 100;
  double tolerance = 1e-10;

  auto* witness = app.add_subcommand("witness", "search for a forcing certificate");
  witness->add_option("--config", config_path, "problem config file")->required();
  witness->add_option("--out", out_path, "output document path");

  auto* verify = app.add_subcommand("verify", "re-validate a certificate document");
  verify->add_option("--in", in_path, "certificate document")->required();
  verify->add_option("--out", out_path, "output report path");

  auto* color = app.add_subcommand("color", "equal-quota coloring search");
  color->add_option("--instance", instance_path, "copy-system file")->required();
  color->add_option("--colors", d_colors, "number of colors")->required();
  color->add_option("--out", out_path, "output document path");

  auto* transversal =
      app.add_subcommand("transversal", "exact-m transversal search");
  transversal->add_option("--instance", instance_path, "copy-system file")
      ->required();
  transversal->add_option("--m", m_param, "intersection count")->required();
  transversal->add_option("--out", out_path, "output document path");

  auto* lemma2 = app.add_subcommand("lemma2", "integer relation among root powers");
  lemma2->add_option("--c", c_param, "modulus parameter c > 1")->required();
  lemma2->add_option("--exponents", exponents, "r,s,t")->required();
  lemma2->add_option("--out", out_path, "output document path");

  auto* rotations = app.add_subcommand("rotations", "print the rotation pool");
  rotations->add_option("--k", k_param, "dimension");
  rotations->add_option("--size", size_param, "pool size");
  rotations->add_option("--field", discriminant, "0 for Q, else quad discriminant");
  rotations->add_option("--out", out_path, "output document path");

  auto* prop1 = app.add_subcommand("prop1", "lattice forcing via simple similarities");
  prop1->add_option("--base", base, "lattice tuple, e.g. \"(0) (1)\"")->required();
  prop1->add_option("--weights", weights, "weights, e.g. \"1 1\"")->required();
  prop1->add_option("--target", target, "target lattice point")->required();
  prop1->add_option("--translations", translations, "translation range")->required();
  prop1->add_option("--dilations", dilations, "dilation range, e.g. \"1 2\"")
      ->required();
  prop1->add_option("--out", out_path, "output document path");

  auto* core = app.add_subcommand("core", "deletion-minimal infeasible core");
  core->add_option("--system", system_path, "affine system file")->required();
  core->add_option("--field", discriminant, "0 for Q, else quad discriminant");
  core->add_option("--out", out_path, "output document path");

  auto* gallery = app.add_subcommand("gallery1d", "one-dimensional counterexamples");
  gallery->add_option("--n", n_param, "tuple {1..n}")->required();
  gallery->add_option("--tolerance", tolerance, "residual tolerance");
  gallery->add_option("--samples", samples, "translation samples");
  gallery->add_option("--out", out_path, "output document path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    pompeiu::RunResult result;
    if (*witness) {
      result = pompeiu::run_witness(read_file(config_path));
    } else if (*verify) {
      result = pompeiu::run_verify(read_file(in_path));
    } else if (*color) {
      result = pompeiu::run_color(read_file(instance_path), d_colors);
    } else if (*transversal) {
      result = pompeiu::run_transversal(read_file(instance_path), m_param);
    } else if (*lemma2) {
      long r = 0, s = 0, t = 0;
      if (std::sscanf(exponents.c_str(), "%ld,%ld,%ld", &r, &s, &t) != 3)
        throw pompeiu::ParseError("--exponents must be r,s,t");
      result = pompeiu::run_lemma2(c_param, r, s, t);
    } else if (*rotations) {
      result = pompeiu::run_rotations(discriminant, k_param, size_param);
    } else if (*prop1) {
      result = pompeiu::run_prop1(base, weights, target, translations, dilations);
    } else if (*core) {
      result = pompeiu::run_core(read_file(system_path), discriminant);
    } else {
      result = pompeiu::run_gallery1d(n_param, tolerance, samples);
    }
    emit(result, out_path);
    return result.exit_code;
  } catch (const pompeiu::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pompeiu::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
