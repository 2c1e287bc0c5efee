#include "sahl.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "classify.hpp"
#include "correspond.hpp"
#include "errors.hpp"
#include "fosimp.hpp"
#include "orderprops.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "semantics.hpp"
#include "translate.hpp"

struct sahl_formula {
  sahl::ModalFormula f;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

sahl_status status_of(sahl::ErrorKind k) {
  using sahl::ErrorKind;
  switch (k) {
    case ErrorKind::Parse: return SAHL_ERR_PARSE;
    case ErrorKind::Unsupported:
    case ErrorKind::CyclicDigraph:
    case ErrorKind::NotInClass:
    case ErrorKind::NotUniform:
    case ErrorKind::NotRegularAntecedent: return SAHL_ERR_UNSUPPORTED;
    case ErrorKind::ResourceCap:
    case ErrorKind::ConjunctCap: return SAHL_ERR_RESOURCE;
    default: return SAHL_ERR_INVALID;
  }
}

template <class Fn>
sahl_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const sahl::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SAHL_ERR_INTERNAL;
  }
}

sahl_status invalid(const char* what) {
  last_error = what;
  return SAHL_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* sahl_version(void) { return "0.1.0"; }

const char* sahl_last_error(void) { return last_error.c_str(); }

void sahl_string_free(char* s) { std::free(s); }

void sahl_correspond_options_init(sahl_correspond_options* o) {
  if (o) *o = {0, 0, 0, SAHL_FORMAT_TEXT};
}

void sahl_verify_options_init(sahl_verify_options* o) {
  if (o) *o = {3, 0, sahl::default_seed};
}

sahl_status sahl_parse(const char* text, sahl_formula** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new sahl_formula{sahl::parse_modal(text)};
    return SAHL_OK;
  });
}

void sahl_formula_free(sahl_formula* f) { delete f; }

sahl_status sahl_formula_print(const sahl_formula* f, char** out) {
  if (!f || !out) return invalid("null argument");
  return guarded([&] {
    put(out, sahl::print_modal(f->f));
    return SAHL_OK;
  });
}

sahl_status sahl_classify(const sahl_formula* f, char** report, char** class_name) {
  if (!f) return invalid("null argument");
  return guarded([&] {
    const auto r = sahl::classify(f->f);
    put(report, sahl::render_classification(r));
    put(class_name, sahl::to_string(r.cls));
    return SAHL_OK;
  });
}

sahl_status sahl_correspond(const sahl_formula* f, const sahl_correspond_options* o, char** out) {
  if (!f || !out) return invalid("null argument");
  sahl_correspond_options opts;
  sahl_correspond_options_init(&opts);
  if (o) opts = *o;
  return guarded([&] {
    try {
      const auto r = sahl::correspond(f->f);
      const sahl::CorrespondOptions co{opts.raw != 0, opts.no_simplify != 0, opts.trace != 0};
      switch (opts.format) {
        case SAHL_FORMAT_JSON: put(out, sahl::render_json(r, co)); break;
        case SAHL_FORMAT_TPTP: put(out, sahl::to_tptp(sahl::selected_correspondent(r, co))); break;
        default: put(out, sahl::render_correspondence(r, co)); break;
      }
      return SAHL_OK;
    } catch (const sahl::UnsupportedError& e) {
      put(out, sahl::render_classification(e.report()));
      throw;
    }
  });
}

sahl_status sahl_translate(const sahl_formula* f, char** st, char** so) {
  if (!f) return invalid("null argument");
  return guarded([&] {
    put(st, sahl::print_fo(sahl::standard_translation("x", f->f)));
    put(so, sahl::print_so(sahl::second_order_translation(f->f)));
    return SAHL_OK;
  });
}

sahl_status sahl_verify(const sahl_formula* f, const char* fo_text, const sahl_verify_options* o, char** out) {
  if (!f || !out) return invalid("null argument");
  sahl_verify_options opts;
  sahl_verify_options_init(&opts);
  if (o) opts = *o;
  return guarded([&] {
    const auto alpha = fo_text ? sahl::parse_fo(fo_text) : sahl::correspond(f->f).combined;
    const auto v = sahl::check_local_correspondence(f->f, alpha, opts.max_n, opts.sample4, opts.seed);
    std::string text = "correspondent: " + sahl::print_fo(alpha) + "\n";
    if (v.pass) {
      text += sahl::render_verdict(v) + "\n";
      put(out, text);
      return SAHL_OK;
    }
    text += sahl::render_verdict(v) + "\n";
    text += "frame: " + v.counterexample->frame.literal() + "\n";
    put(out, text);
    last_error = sahl::describe(*v.counterexample);
    return SAHL_ERR_COUNTEREXAMPLE;
  });
}

sahl_status sahl_props(const sahl_formula* f, const char* frame_literal, int all_frames_n, char** out) {
  if (!f || !out) return invalid("null argument");
  if ((frame_literal != nullptr) == (all_frames_n > 0)) return invalid("give either a frame or a frame size");
  return guarded([&] {
    const auto rep = sahl::classify(f->f);
    const auto imp = rep.implication() ? *rep.implication() : f->f;
    std::ostringstream os;
    os << "implication: " << sahl::print_modal(imp) << "\n";
    os << "class: " << sahl::to_string(rep.cls) << "\n";
    if (frame_literal) {
      const auto F = sahl::Frame::parse(frame_literal);
      os << "frame: " << F.literal() << "\n";
      for (const auto& c : sahl::validate_conditions(imp, rep, F))
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    } else {
      os << "frames: all of size " << all_frames_n << "\n";
      for (const auto& c : sahl::validate_conditions_all(imp, rep, all_frames_n)) {
        os << (c.pass() ? "PASS " : "FAIL ") << c.name << " (" << c.passed << "/" << c.total << " frames";
        if (c.first_failure) os << ", first failure " << c.first_failure->literal();
        os << "): " << c.detail << "\n";
      }
    }
    put(out, os.str());
    return SAHL_OK;
  });
}

int sahl_fo_equivalent(const char* a, const char* b, int max_n) {
  if (!a || !b) return -invalid("null argument");
  int result = 0;
  const auto s = guarded([&] {
    result = sahl::equivalent_on_small_frames(sahl::parse_fo(a), sahl::parse_fo(b), max_n).pass ? 1 : 0;
    return SAHL_OK;
  });
  return s == SAHL_OK ? result : -static_cast<int>(s);
}

}  // extern "C"
