// homlie: verify, build and classify hom-Lie algebra instances.
#include "homlie/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <unistd.h>

namespace {

bool use_color() {
  const char* env = std::getenv("HOMLIE_COLOR");
  if (env) return std::string(env) != "0";
  return isatty(STDOUT_FILENO) != 0;
}

homlie::Bindings parse_bindings(const std::vector<std::string>& raw) {
  homlie::Bindings out;
  for (const auto& text : raw) {
    auto [name, value] = homlie::parse_binding(text);
    if (!out.emplace(name, value).second) throw homlie::InputError("parameter '" + name + "' bound twice");
  }
  return out;
}

int emit(const homlie::Report& report, const std::string& json_path) {
  std::cout << report.to_text(use_color());
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw homlie::InputError("cannot write '" + json_path + "'");
    out << report.to_json().dump(2) << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of hom-Lie algebra structures"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> params;
  std::string checks;
  std::string target;
  std::string json_path;
  std::string twist;
  std::string B;

  CLI::App* verify = app.add_subcommand("verify", "Run axiom checks on an instance");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("-p,--param", params, "Parameter binding name=value")->allow_extra_args(false);
  verify->add_option("--checks", checks, "Comma-separated checks (default: all applicable except jacobi)");
  verify->add_option("--json", json_path, "Write the JSON report here");

  CLI::App* build = app.add_subcommand("build", "Construct a derived structure");
  build->add_option("file", file, "Instance file")->required();
  build->add_option("-p,--param", params, "Parameter binding name=value")->allow_extra_args(false);
  build->add_option("--target", target, "levi-civita | left-symmetric | phase-space | complexify | induced-omega")
      ->required();
  build->add_option("--json", json_path, "Write the JSON report here");

  CLI::App* classify = app.add_subcommand("classify2", "Almost complex structures on the 2D algebra [e1,e2] = e2");
  classify->add_option("--twist", twist, "hat | bar | tilde")->required();
  classify->add_option("--B", B, "Parameter of the tilde twist");
  classify->add_option("--json", json_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      std::vector<std::string> list;
      std::stringstream ss(checks);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) list.push_back(item);
      return emit(homlie::cmd_verify(homlie::load_instance(file), parse_bindings(params), list), json_path);
    }
    if (*build) return emit(homlie::cmd_build(homlie::load_instance(file), parse_bindings(params), target), json_path);
    std::optional<homlie::Rational> b;
    if (!B.empty()) b = homlie::parse_binding("B=" + B).second;
    return emit(homlie::cmd_classify2(twist, b), json_path);
  } catch (const homlie::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
