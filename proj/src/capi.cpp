#include "helgason/helgason.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

#include "helgason/closedform.hpp"
#include "helgason/crosscheck.hpp"
#include "helgason/serialize.hpp"

using namespace helgason;

struct hg_entry {
  CatalogEntry entry;
  Base base;
  std::optional<SphericityPlan> plan;  // points into entry.system, so built in place
};

namespace {

thread_local std::string last_error;

hg_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return HG_ERR_PARSE;
    case ErrorKind::UnknownFamily: return HG_ERR_UNKNOWN_FAMILY;
    case ErrorKind::ParameterViolation: return HG_ERR_PARAMETER;
    case ErrorKind::WrongArity:
    case ErrorKind::DimensionMismatch: return HG_ERR_ARITY;
    case ErrorKind::NotSimple: return HG_ERR_NOT_SIMPLE;
    case ErrorKind::SpanViolation:
    case ErrorKind::NotLinearlyIndependent:
    case ErrorKind::UnknownRoot: return HG_ERR_INVALID_BASE;
    default: return HG_ERR_DOMAIN;
  }
}

hg_status fail(hg_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
hg_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HG_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Weight parse_sized(const char* text, std::size_t dim, const char* what) {
  Weight w = parse_weight(text);
  if (w.dim() != dim)
    throw Error(ErrorKind::WrongArity, std::string(what) + " has " + std::to_string(w.dim()) +
                                           " coordinates, expected " + std::to_string(dim));
  return w;
}

hg_verdict verdict_code(SphericityVerdict::Kind k) {
  switch (k) {
    case SphericityVerdict::Kind::Spherical: return HG_SPHERICAL;
    case SphericityVerdict::Kind::NotSpherical: return HG_NOT_SPHERICAL;
    case SphericityVerdict::Kind::Undetermined: return HG_UNDETERMINED;
  }
  return HG_UNDETERMINED;
}

Json sample_json(const CrosscheckSample& s) {
  return {{"weight", to_json(s.lambda)}, {"procedure", to_string(s.procedure)}, {"table", s.oracle}};
}

}  // namespace

extern "C" {

void hg_params_init(hg_params* p) {
  if (!p) return;
  *p = hg_params{nullptr, -1, -1, -1, -1, nullptr};
}

hg_status hg_entry_create(const hg_params* params, hg_entry** out) {
  if (!params || !params->family || !out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    PairSpec spec;
    spec.family = params->family;
    spec.m = params->m;
    spec.n = params->n;
    spec.r = params->r;
    spec.s = params->s;
    if (params->deformation) spec.deformation = parse_scalar(params->deformation);
    auto e = std::make_unique<hg_entry>(hg_entry{build_pair(spec), {}, std::nullopt});
    e->base = e->entry.default_base;
    e->plan.emplace(e->entry.system, e->base);
    *out = e.release();
    return HG_OK;
  });
}

void hg_entry_destroy(hg_entry* entry) { delete entry; }

hg_status hg_entry_set_base(hg_entry* e, const char* tuples) {
  if (!e) return fail(HG_ERR_INVALID_ARGUMENT, "null entry");
  return guarded([&] {
    Base base = e->entry.default_base;
    if (tuples) {
      const auto simples = parse_tuples(tuples);
      for (const auto& v : simples)
        if (v.dim() != e->entry.system.dim())
          throw Error(ErrorKind::WrongArity, "base vector " + v.to_string() + " has the wrong dimension");
      if (simples.size() != e->entry.default_base.size())
        throw Error(ErrorKind::NotLinearlyIndependent,
                    "a base has " + std::to_string(e->entry.default_base.size()) + " simple roots");
      base = validate_base(simples, e->entry.system);
    }
    SphericityPlan plan(e->entry.system, base);  // may throw; keep the old plan until it succeeds
    e->plan.emplace(std::move(plan));
    e->base = std::move(base);
    return HG_OK;
  });
}

hg_status hg_entry_dim(const hg_entry* e, size_t* out) {
  if (!e || !out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  *out = e->entry.system.dim();
  return HG_OK;
}

hg_status hg_families_json(char** out) {
  if (!out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Json a = Json::array();
    for (const auto& f : list_families()) a.push_back(describe_family(f));
    *out = dup(a.dump(2));
    return HG_OK;
  });
}

hg_status hg_entry_describe_json(const hg_entry* e, char** out) {
  if (!e || !out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Json j = describe_entry(e->entry);
    j["family"] = describe_family(family_info(e->entry.spec.family));
    if (!(e->base == e->entry.default_base)) {
      j["base"] = to_json(e->base);
      j["base_principal_roots"] = Json::array();
      for (const auto& g : e->plan->principal()) j["base_principal_roots"].push_back(to_json(g));
    }
    *out = dup(j.dump(2));
    return HG_OK;
  });
}

hg_status hg_check(const hg_entry* e, const char* weight, hg_verdict* verdict, char** json_out) {
  if (!e || !weight || !verdict) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Weight w = parse_sized(weight, e->entry.system.dim(), "weight");
    SphericityVerdict v = e->plan->decide(w);
    *verdict = verdict_code(v.kind);
    if (json_out) *json_out = dup(to_json(make_verdict_document(e->entry.spec.family, e->base, w, std::move(v))).dump(2));
    return HG_OK;
  });
}

hg_status hg_reflect(const hg_entry* e, const char* root, const char* weight, char** json_out) {
  if (!e || !root || !json_out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::size_t dim = e->entry.system.dim();
    const Weight alpha = parse_sized(root, dim, "root");
    std::optional<Weight> lambda;
    if (weight) lambda = parse_sized(weight, dim, "weight");
    const ReflectionStep step = reflection_step(alpha, e->base, lambda, e->entry.system);
    Json j{{"pair", e->entry.spec.family},
           {"class", classify_root(alpha, e->entry.system) == RootClass::Singular ? "singular" : "regular"}};
    const Json sj = to_json(step);
    for (auto it = sj.begin(); it != sj.end(); ++it) j[it.key()] = *it;
    if (lambda && !step.weight_effect) j["weyl_image"] = to_json(regular_reflect_weight(alpha, *lambda, e->entry.system));
    j["version"] = kVersion;
    *json_out = dup(j.dump(2));
    return HG_OK;
  });
}

hg_status hg_enumerate(const hg_entry* e, int max_coeff, unsigned threads, char** json_out) {
  if (!e || !json_out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  if (max_coeff < 0) return fail(HG_ERR_INVALID_ARGUMENT, "max_coeff must be nonnegative");
  return guarded([&] {
    Json a = Json::array();
    for (const auto& w : enumerate_spherical(*e->plan, e->entry.system.dim(), max_coeff, threads)) a.push_back(to_json(w));
    *json_out = dup(a.dump());
    return HG_OK;
  });
}

hg_status hg_crosscheck(const hg_entry* e, int max_coeff, const char* variant, unsigned threads, int* clean,
                        char** json_out) {
  if (!e || !clean) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  if (max_coeff < 0) return fail(HG_ERR_INVALID_ARGUMENT, "max_coeff must be nonnegative");
  return guarded([&] {
    const std::string v = variant ? variant : "table";
    const PairSpec spec = e->entry.spec;
    closed_form(spec, Weight(e->entry.system.dim()), v);  // rejects unknown variants up front
    CrosscheckReport r = crosscheck(
        *e->plan, e->entry.system.dim(), max_coeff, [&](const Weight& w) { return closed_form(spec, w, v); },
        threads);
    *clean = r.clean() ? 1 : 0;
    if (json_out) {
      Json d = Json::array(), u = Json::array();
      for (const auto& s : r.disagreement_samples) d.push_back(sample_json(s));
      for (const auto& s : r.undetermined_samples) u.push_back(sample_json(s));
      Json j{{"pair", spec.family},  {"variant", v},
             {"base", to_json(e->base)}, {"max_coeff", max_coeff},
             {"total", r.total},     {"agree_spherical", r.agree_spherical},
             {"agree_not_spherical", r.agree_not}, {"disagreements", r.disagreements},
             {"undetermined", r.undetermined},     {"clean", r.clean()},
             {"disagreement_samples", d},          {"undetermined_samples", u},
             {"version", kVersion}};
      *json_out = dup(j.dump(2));
    }
    return HG_OK;
  });
}

hg_status hg_basegraph(const hg_entry* e, int singular_only, char** json_out, char** dot_out) {
  if (!e || !json_out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const GraphDocument g = make_graph_document(e->entry.spec.family, e->entry.system, e->base, singular_only != 0);
    char* json = dup(to_json(g).dump(2));
    if (dot_out) {
      try {
        *dot_out = dup(to_dot(g));
      } catch (...) {
        std::free(json);
        throw;
      }
    }
    *json_out = json;
    return HG_OK;
  });
}

hg_status hg_verdict_normalize(const char* json, char** out) {
  if (!json || !out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Json j;
    try {
      j = Json::parse(json);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::Parse, ex.what());
    }
    *out = dup(to_json(verdict_document_from_json(j)).dump(2));
    return HG_OK;
  });
}

const char* hg_last_error(void) { return last_error.c_str(); }

const char* hg_status_name(hg_status s) {
  switch (s) {
    case HG_OK: return "ok";
    case HG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HG_ERR_PARSE: return "parse error";
    case HG_ERR_UNKNOWN_FAMILY: return "unknown family";
    case HG_ERR_PARAMETER: return "parameter violation";
    case HG_ERR_ARITY: return "wrong arity";
    case HG_ERR_NOT_SIMPLE: return "not simple";
    case HG_ERR_INVALID_BASE: return "invalid base";
    case HG_ERR_DOMAIN: return "domain error";
    case HG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hg_version(void) { return kVersion; }

void hg_string_free(char* s) { std::free(s); }

}  // extern "C"
