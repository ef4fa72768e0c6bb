// toricideal <cmd> <file> [--t p/q] [--out path] [--box N] [--format json|text]
//
// Exit status: 0 success, 1 usage or input error, 2 mathematical
// precondition failure, 3 verification disagreement.

#include "toricideal/toricideal.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int fail(int code, const std::string& msg) {
  std::cerr << "toricideal: " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Test ideals and multiplier ideals of toric pairs and triples"};
  std::string cmd, file, t_text, out_path, format = "json";
  long box = 8;
  app.add_option("command", cmd, "dual | pair | triple | multiplier | multiplier-res | charp | resolve | verify | plot")
      ->required()
      ->check(CLI::IsMember(toricideal::command_names()));
  app.add_option("file", file, "problem file (JSON)")->required();
  app.add_option("--t", t_text, "exponent as p/q; overrides the file");
  app.add_option("--out", out_path, "write the result here instead of stdout");
  app.add_option("--box", box, "oracle truncation bound")->check(CLI::Range(1L, 64L));
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    std::ifstream in(file);
    if (!in) return fail(1, "cannot read " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    toricideal::ProblemFile problem = toricideal::parse_problem(buf.str());
    for (const auto& w : problem.warnings) std::cerr << "warning: " << w << "\n";

    toricideal::CommandOptions opt;
    opt.box = box;
    if (!t_text.empty()) {
      try {
        opt.t = toricideal::Rat::parse(t_text);
      } catch (const std::exception& e) {
        return fail(1, std::string("--t: ") + e.what());
      }
    }
    toricideal::CommandResult res = toricideal::run_command(cmd, problem, opt);

    std::string text;
    if (res.svg) {
      text = *res.svg;
    } else {
      text = format == "json" ? res.doc.dump(2) + "\n" : toricideal::render_text(res.doc);
    }
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) return fail(1, "cannot write " + out_path);
      out << text;
    }
    if (res.status == 3) std::cerr << "toricideal: verification disagreement\n";
    return res.status;
  } catch (const toricideal::InputError& e) {
    return fail(1, e.what());
  } catch (const toricideal::PreconditionError& e) {
    return fail(2, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(1, e.what());
  }
}
