// Copyright 2026 The bohrify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bohrify/commands.hpp"
#include "bohrify/error.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> expand_models(const std::vector<std::string>& args) {
  std::vector<fs::path> out;
  for (const auto& a : args) {
    const fs::path p(a);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.path().extension() == ".json") found.push_back(entry.path());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bohrify::ValidationError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Context posets and external spectra of finite holonomy-flux models"};
  std::string command;
  std::vector<std::string> models;
  std::string report_path;
  std::string dot_dir;
  std::string projections;
  bohrify::CommandOptions options;
  std::size_t depth = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;

  app.add_option("command", command, "contexts | spectrum | sobriety | chain | invariance | logic | verify-all")
      ->required()
      ->check(CLI::IsMember(bohrify::command_names()));
  app.add_option("--model", models, "model file (verify-all also takes directories; defaults to the fixtures)");
  auto* depth_opt = app.add_option("--depth", depth, "chain depth")->check(CLI::PositiveNumber);
  app.add_option("--report", report_path, "write the report here instead of stdout");
  app.add_option("--dot", dot_dir, "directory for DOT diagrams");
  auto* tol_opt = app.add_option("--tol", tol, "override the model tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--partial", options.partial, "sobriety over closures of small antichains only");
  auto* seed_opt = app.add_option("--seed", seed, "seed for sampled checks");
  app.add_flag("--diffeo", options.diffeo, "invariance: diffeomorphisms");
  app.add_flag("--gauge", options.gauge, "invariance: gauge transformations");
  app.add_option("--projections", projections, "logic: comma-separated projection names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*depth_opt) options.depth = depth;
  if (*tol_opt) options.tol = tol;
  if (*seed_opt) options.seed = seed;
  std::stringstream names(projections);
  for (std::string item; std::getline(names, item, ',');)
    if (!item.empty()) options.projections.push_back(item);

  const auto start = std::chrono::steady_clock::now();
  try {
    if (models.empty()) {
      if (command != "verify-all") throw bohrify::ValidationError(command + ": --model is required");
      models.push_back(BOHRIFY_FIXTURE_DIR);
    }
    std::vector<bohrify::ModelSpec> specs;
    for (const auto& path : expand_models(models)) specs.push_back(bohrify::load_model(path));
    const auto out = bohrify::run_command(command, std::move(specs), options);
    if (report_path.empty()) {
      std::cout << out.report;
    } else {
      write_file(report_path, out.report);
    }
    if (!dot_dir.empty()) {
      fs::create_directories(dot_dir);
      for (const auto& [name, text] : out.dot_files) write_file(fs::path(dot_dir) / name, text);
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed: " << ms.count() << " ms\n";
    return out.exit_code;
  } catch (const bohrify::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bohrify::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
