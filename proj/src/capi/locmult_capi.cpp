#include "locmult/locmult.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "cli/commands.hpp"
#include "cli/corpus.hpp"
#include "cli/parser.hpp"
#include "polyalg/errors.hpp"

struct lm_document {
  locmult::SourceDocument doc;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

locmult::CommandOptions convert(const lm_options* o) {
  locmult::CommandOptions c;
  lm_options defaults;
  lm_options_init(&defaults);
  if (!o) o = &defaults;
  c.max_degree = o->max_degree;
  c.max_n = o->max_n;
  c.window = o->window;
  c.equidim = o->equidim != 0;
  c.timing = o->timing != 0;
  if (o->order) c.order = o->order;
  return c;
}

bool wants_json(const lm_options* o) { return o && o->json; }

lm_status status_of(const locmult::Error& e) { return static_cast<lm_status>(static_cast<int>(e.error_class())); }

template <class F>
lm_status guarded(char** out, const lm_options* opts, F&& body) {
  if (!out) return LM_ERR_PARSE;
  *out = nullptr;
  try {
    locmult::CommandOutput result = body();
    *out = dup_string(wants_json(opts) ? locmult::emit_json(result.document) : result.text);
    if (!*out) return LM_ERR_INTERNAL;
    return result.failed ? LM_ERR_MATH : LM_OK;
  } catch (const locmult::Error& e) {
    std::string msg = e.what();
    if (wants_json(opts)) {
      locmult::Json j;
      j["error"] = e.tag();
      j["message"] = msg;
      j["status"] = static_cast<int>(e.error_class());
      msg = locmult::emit_json(j);
    }
    *out = dup_string(msg);
    return status_of(e);
  } catch (const std::bad_alloc&) {
    return LM_ERR_BUDGET;
  } catch (const std::exception& e) {
    *out = dup_string(std::string("internal error: ") + e.what());
    return LM_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

void lm_options_init(lm_options* opts) {
  if (!opts) return;
  opts->max_degree = 40;
  opts->max_n = 24;
  opts->window = 3;
  opts->json = 0;
  opts->equidim = 0;
  opts->timing = 0;
  opts->order = "grevlex";
}

lm_status lm_document_parse(const char* text, size_t length, lm_document** doc, char** error) {
  if (!doc) return LM_ERR_PARSE;
  *doc = nullptr;
  if (error) *error = nullptr;
  if (!text) {
    if (error) *error = dup_string("null source text");
    return LM_ERR_PARSE;
  }
  try {
    auto d = std::make_unique<lm_document>();
    d->doc = locmult::parse_source(std::string_view(text, length));
    *doc = d.release();
    return LM_OK;
  } catch (const locmult::Error& e) {
    if (error) *error = dup_string(e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    if (error) *error = dup_string(std::string("internal error: ") + e.what());
    return LM_ERR_INTERNAL;
  }
}

void lm_document_free(lm_document* doc) { delete doc; }

lm_status lm_cmd_run(const lm_document* doc, const char* command, const char* const* args, size_t nargs,
                     const lm_options* opts, char** out) {
  return guarded(out, opts, [&] {
    if (!doc || !command) throw locmult::UsageError("usage", "missing document or command");
    std::vector<std::string> a;
    for (size_t i = 0; i < nargs; ++i) {
      if (!args[i]) throw locmult::UsageError("usage", "null argument");
      a.emplace_back(args[i]);
    }
    return locmult::run_command(doc->doc, command, a, convert(opts));
  });
}

lm_status lm_cmd_gb(const lm_document* doc, const char* ideal, const lm_options* opts, char** out) {
  const char* args[] = {ideal};
  return lm_cmd_run(doc, "gb", args, 1, opts, out);
}

lm_status lm_cmd_mult(const lm_document* doc, const char* ideal, const lm_options* opts, char** out) {
  const char* args[] = {ideal};
  return lm_cmd_run(doc, "mult", args, 1, opts, out);
}

lm_status lm_cmd_tangent(const lm_document* doc, const char* ideal, const lm_options* opts, char** out) {
  const char* args[] = {ideal};
  return lm_cmd_run(doc, "tangent", args, 1, opts, out);
}

lm_status lm_cmd_chi(const lm_document* doc, const char* i, const char* j, const lm_options* opts, char** out) {
  const char* args[] = {i, j};
  return lm_cmd_run(doc, "chi", args, 2, opts, out);
}

lm_status lm_cmd_report(const lm_document* doc, const char* i, const char* j, const lm_options* opts, char** out) {
  const char* args[] = {i, j};
  return lm_cmd_run(doc, "report", args, 2, opts, out);
}

lm_status lm_cmd_format(const lm_document* doc, const lm_options* opts, char** out) {
  return lm_cmd_run(doc, "format", nullptr, 0, opts, out);
}

lm_status lm_cmd_corpus(const char* suite, const char* ledger, const lm_options* opts, char** out) {
  return guarded(out, opts, [&] {
    return locmult::corpus_command(suite ? suite : "", ledger ? ledger : "", convert(opts));
  });
}

void lm_string_free(char* s) { std::free(s); }

const char* lm_version(void) { return LOCMULT_VERSION; }

const char* lm_status_name(lm_status status) {
  switch (status) {
    case LM_OK:
      return "ok";
    case LM_ERR_MATH:
      return "precondition";
    case LM_ERR_PARSE:
      return "usage";
    case LM_ERR_BUDGET:
      return "budget";
    case LM_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

}  // extern "C"
