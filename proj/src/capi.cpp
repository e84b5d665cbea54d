#include "skewring/skewring.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "skewring/corpus.hpp"
#include "skewring/deciders.hpp"
#include "skewring/serialize.hpp"

struct sr_structure {
  skewring::Endomorphism alpha;
};

struct sr_verdict {
  skewring::Endomorphism alpha;
  skewring::Verdict verdict;
};

namespace {

using namespace skewring;

thread_local std::string g_last_error;

sr_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return SR_ERR_INVALID_ARGUMENT;
    case ErrorKind::AxiomViolation: return SR_ERR_AXIOM;
    case ErrorKind::SizeCap: return SR_ERR_SIZE_CAP;
    case ErrorKind::Budget: return SR_ERR_BUDGET;
    case ErrorKind::Parse: return SR_ERR_PARSE;
    case ErrorKind::Mismatch: return SR_ERR_MISMATCH;
    case ErrorKind::Io: return SR_ERR_IO;
  }
  return SR_ERR_INTERNAL;
}

sr_status set_error(sr_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
sr_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return SR_OK;
  } catch (const Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SR_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::InvalidArgument, what);
}

RingLimits limits_for(size_t size_cap) {
  RingLimits limits;
  if (size_cap != 0) limits.size_cap = size_cap;
  return limits;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Envelope envelope_for(PropertyId id, const sr_check_options* o) {
  if (is_element_level(id)) return Envelope::exhaustive();
  require(o != nullptr, "polynomial properties need check options with an envelope");
  const bool laurent_series = id == PropertyId::LaurentPowerSeriesQAlphaSkew;
  switch (id) {
    case PropertyId::LaurentQAlphaSkew:
      require(o->envelope == SR_ENVELOPE_WINDOW, "laurent-q-alpha-skew needs an exponent window");
      return Envelope::laurent_window({o->window[0], o->window[1], o->window[2], o->window[3]});
    case PropertyId::PowerSeriesQAlphaSkew:
    case PropertyId::LaurentPowerSeriesQAlphaSkew:
      require(o->envelope == SR_ENVELOPE_TRUNCATION, "power-series properties need a truncation order");
      require(o->order > 0, "truncation order must be positive");
      return Envelope::truncation(o->order, laurent_series);
    default:
      require(o->envelope == SR_ENVELOPE_DEGREE, "polynomial properties need a degree bound");
      return Envelope::degree_bound(o->degree);
  }
}

}  // namespace

extern "C" {

const char* sr_version(void) { return "1.0.0"; }

const char* sr_last_error(void) { return g_last_error.c_str(); }

void sr_string_free(char* s) { std::free(s); }

sr_status sr_structure_parse(const char* text, size_t size_cap, sr_structure** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new sr_structure{parse_ring_document(text, limits_for(size_cap))};
  });
}

sr_status sr_structure_load(const char* path, size_t size_cap, sr_structure** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new sr_structure{parse_ring_document(read_file(path), limits_for(size_cap))};
  });
}

void sr_structure_free(sr_structure* s) { delete s; }

sr_status sr_structure_size(const sr_structure* s, size_t* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = s->alpha.ring().size();
  });
}

sr_status sr_structure_orbit(const sr_structure* s, size_t* preperiod, size_t* period) {
  return guarded([&] {
    require(s && preperiod && period, "null argument");
    *preperiod = s->alpha.orbit().preperiod;
    *period = s->alpha.orbit().period;
  });
}

sr_status sr_structure_describe(const sr_structure* s, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = dup_string(describe_structure(s->alpha));
  });
}

sr_status sr_structure_document(const sr_structure* s, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = dup_string(ring_document(s->alpha));
  });
}

sr_status sr_check(const sr_structure* s, const char* property, const sr_check_options* options,
                   sr_verdict** out) {
  return guarded([&] {
    require(s && property && out, "null argument");
    const auto id = property_from_name(property);
    if (!id) fail(ErrorKind::InvalidArgument, std::string("unknown property '") + property + "'");
    SearchOptions search;
    if (options && options->tuple_budget != 0) search.tuple_budget = options->tuple_budget;
    if (options) search.threads = options->threads;
    const Envelope env = envelope_for(*id, options);
    *out = new sr_verdict{s->alpha, check_property(s->alpha, *id, env, search)};
  });
}

void sr_verdict_free(sr_verdict* v) { delete v; }

sr_status sr_verdict_holds(const sr_verdict* v, int* holds) {
  return guarded([&] {
    require(v && holds, "null argument");
    *holds = v->verdict.holds ? 1 : 0;
  });
}

sr_status sr_verdict_render(const sr_verdict* v, sr_format format, char** out) {
  return guarded([&] {
    require(v && out, "null argument");
    *out = dup_string(format == SR_FORMAT_STRUCTURED ? verdict_record(v->alpha, v->verdict)
                                                     : render_verdict(v->alpha, v->verdict));
  });
}

sr_status sr_replay(const char* record_text, int* reproduced, char** report) {
  return guarded([&] {
    require(record_text && reproduced, "null argument");
    const VerdictRecord record = parse_verdict_record(record_text);
    const ReplayResult r = replay(record.alpha, record.verdict);
    *reproduced = r.reproduced ? 1 : 0;
    if (report) *report = dup_string(r.detail);
  });
}

sr_status sr_corpus_run(const char* manifest_text, const char* const* names, size_t count, uint32_t degree,
                        uint64_t tuple_budget, int* passed, char** report) {
  return guarded([&] {
    require(passed && (count == 0 || names), "null argument");
    const auto corpus = manifest_text ? load_corpus(manifest_text) : default_corpus();
    std::vector<std::string> selected;
    for (size_t k = 0; k < count; ++k) {
      require(names[k] != nullptr, "null entry name");
      selected.emplace_back(names[k]);
    }
    SearchOptions search;
    if (tuple_budget != 0) search.tuple_budget = tuple_budget;
    const HarnessReport r = run_corpus(corpus, selected, degree, search);
    *passed = r.passed() ? 1 : 0;
    if (report) *report = dup_string(r.render());
  });
}

}  // extern "C"
