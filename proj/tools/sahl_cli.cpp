#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sahl.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { sahl_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int report(sahl_status s, const Owned& out) {
  if (s == SAHL_OK) {
    std::cout << out.str();
    return 0;
  }
  if (s == SAHL_ERR_COUNTEREXAMPLE) {
    std::cout << out.str();
    return s;
  }
  std::cerr << "error: " << sahl_last_error() << "\n";
  if (out.p) std::cerr << out.str();
  return s;
}

struct Formula {
  sahl_formula* f = nullptr;
  ~Formula() { sahl_formula_free(f); }
};

int parse(const std::string& text, Formula& out) {
  const auto s = sahl_parse(text.c_str(), &out.f);
  if (s != SAHL_OK) std::cerr << "error: " << sahl_last_error() << "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sahlqvist and atomic inductive correspondence engine"};
  app.require_subcommand(1);
  std::string formula;

  auto* classify = app.add_subcommand("classify", "Classify a modal formula");
  classify->add_option("formula", formula)->required();

  auto* correspond = app.add_subcommand("correspond", "Compute the first-order frame correspondent");
  correspond->add_option("formula", formula)->required();
  bool raw = false, no_simplify = false, trace = false;
  std::string format = "text";
  correspond->add_flag("--raw", raw, "Print only the unsimplified correspondent");
  correspond->add_flag("--no-simplify", no_simplify, "Skip simplification");
  correspond->add_flag("--trace", trace, "Show schemes, alpha definitions and intermediate forms");
  correspond->add_option("--format", format)->check(CLI::IsMember({"text", "json", "tptp"}));

  auto* translate = app.add_subcommand("translate", "Print the standard and second-order translations");
  translate->add_option("formula", formula)->required();

  auto* verify = app.add_subcommand("verify", "Check a local correspondent on small frames");
  verify->add_option("formula", formula)->required();
  std::string fo;
  bool generated = false;
  int max_n = 3;
  std::size_t sample4 = 0;
  std::uint64_t seed = 0;
  auto* fo_opt = verify->add_option("fo", fo, "First-order formula in x");
  auto* gen_opt = verify->add_flag("--against-generated", generated, "Check the generated correspondent");
  fo_opt->excludes(gen_opt);
  verify->add_option("--max-n", max_n)->check(CLI::Range(1, 8));
  verify->add_option("--sample4", sample4);
  auto* seed_opt = verify->add_option("--seed", seed);

  auto* props = app.add_subcommand("props", "Check the order-theoretic side conditions");
  props->add_option("formula", formula)->required();
  std::string frame;
  int all_frames = 0;
  auto* frame_opt = props->add_option("--frame", frame, "Frame literal n;i->j,...");
  auto* all_opt = props->add_option("--all-frames", all_frames, "Check every frame of this size")->check(CLI::Range(1, 3));
  frame_opt->excludes(all_opt);

  CLI11_PARSE(app, argc, argv);

  Formula f;
  if (int s = parse(formula, f)) return s;
  Owned out;

  if (*classify) return report(sahl_classify(f.f, &out.p, nullptr), out);

  if (*correspond) {
    sahl_correspond_options o;
    sahl_correspond_options_init(&o);
    o.raw = raw;
    o.no_simplify = no_simplify;
    o.trace = trace;
    o.format = format == "json" ? SAHL_FORMAT_JSON : format == "tptp" ? SAHL_FORMAT_TPTP : SAHL_FORMAT_TEXT;
    return report(sahl_correspond(f.f, &o, &out.p), out);
  }

  if (*translate) {
    Owned so;
    const auto s = sahl_translate(f.f, &out.p, &so.p);
    if (s == SAHL_OK) {
      std::cout << "ST: " << out.str() << "\nSO: " << so.str() << "\n";
      return 0;
    }
    return report(s, out);
  }

  if (*verify) {
    if (!generated && fo_opt->count() == 0) {
      std::cerr << "error: give a first-order formula or --against-generated\n";
      return SAHL_ERR_INVALID;
    }
    sahl_verify_options o;
    sahl_verify_options_init(&o);
    o.max_n = max_n;
    o.sample4 = sample4;
    if (seed_opt->count()) o.seed = seed;
    return report(sahl_verify(f.f, generated ? nullptr : fo.c_str(), &o, &out.p), out);
  }

  if (frame_opt->count() == 0 && all_opt->count() == 0) {
    std::cerr << "error: give --frame or --all-frames\n";
    return SAHL_ERR_INVALID;
  }
  return report(sahl_props(f.f, frame_opt->count() ? frame.c_str() : nullptr, all_frames, &out.p), out);
}
