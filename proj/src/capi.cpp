#include "dmaxsat/dmaxsat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dmaxsat/circuit_io.hpp"
#include "dmaxsat/count.hpp"
#include "dmaxsat/gadgets.hpp"
#include "dmaxsat/reduction.hpp"
#include "dmaxsat/selftest.hpp"
#include "dmaxsat/solver.hpp"

struct dmaxsat_formula {
  dmaxsat::Formula value;
};

struct dmaxsat_query {
  dmaxsat::ThresholdQuery value;
  std::string audit;
};

struct dmaxsat_instance {
  dmaxsat::SplitInstance value;
};

struct dmaxsat_witness {
  dmaxsat::Witness value;
  std::string assignment;
};

namespace {

thread_local std::string last_error;

dmaxsat_status fail(dmaxsat_status status, const char* what) {
  last_error = what;
  return status;
}

struct InvalidArgument : std::exception {
  const char* name;
  explicit InvalidArgument(const char* n) : name(n) {}
  const char* what() const noexcept override { return name; }
};

template <typename T>
void require(const T* p, const char* name) {
  if (!p) throw InvalidArgument(name);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, mapping library exceptions onto status codes.
template <typename Body>
dmaxsat_status call(Body&& body) {
  try {
    body();
    last_error.clear();
    return DMAXSAT_OK;
  } catch (const InvalidArgument& e) {
    return fail(DMAXSAT_ERR_INVALID_ARGUMENT, (std::string("null ") + e.what()).c_str());
  } catch (const dmaxsat::ParseError& e) {
    return fail(DMAXSAT_ERR_PARSE, e.what());
  } catch (const dmaxsat::ScopeError& e) {
    return fail(DMAXSAT_ERR_SCOPE, e.what());
  } catch (const dmaxsat::RangeError& e) {
    return fail(DMAXSAT_ERR_RANGE, e.what());
  } catch (const dmaxsat::ArityError& e) {
    return fail(DMAXSAT_ERR_ARITY, e.what());
  } catch (const dmaxsat::LimitError& e) {
    return fail(DMAXSAT_ERR_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DMAXSAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DMAXSAT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DMAXSAT_ERR_INTERNAL, "unknown exception");
  }
}

}  // namespace

extern "C" {

const char* dmaxsat_last_error(void) { return last_error.c_str(); }

const char* dmaxsat_status_name(dmaxsat_status status) {
  switch (status) {
    case DMAXSAT_OK:
      return "ok";
    case DMAXSAT_ERR_PARSE:
      return "parse error";
    case DMAXSAT_ERR_SCOPE:
      return "scope error";
    case DMAXSAT_ERR_RANGE:
      return "range error";
    case DMAXSAT_ERR_ARITY:
      return "arity error";
    case DMAXSAT_ERR_LIMIT:
      return "limit exceeded";
    case DMAXSAT_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case DMAXSAT_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void dmaxsat_string_free(char* s) { std::free(s); }

dmaxsat_status dmaxsat_formula_parse(const char* text, dmaxsat_format format,
                                     dmaxsat_formula** out) {
  if (!text || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    dmaxsat::InputFormat f = format == DMAXSAT_FORMAT_CIRCUIT  ? dmaxsat::InputFormat::Circuit
                             : format == DMAXSAT_FORMAT_DIMACS ? dmaxsat::InputFormat::Dimacs
                                                               : dmaxsat::sniff_format(text);
    *out = new dmaxsat_formula{dmaxsat::parse_formula(text, f)};
  });
}

void dmaxsat_formula_free(dmaxsat_formula* f) { delete f; }

dmaxsat_status dmaxsat_formula_print(const dmaxsat_formula* f, char** out) {
  if (!f || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] { *out = dup_string(dmaxsat::print_circuit(f->value)); });
}

uint32_t dmaxsat_formula_scope(const dmaxsat_formula* f) { return f ? f->value.scope() : 0; }

size_t dmaxsat_formula_size(const dmaxsat_formula* f) { return f ? dmaxsat::size(f->value) : 0; }

dmaxsat_status dmaxsat_count(const dmaxsat_formula* f, dmaxsat_engine engine, uint32_t brute_limit,
                             char** out_count) {
  if (!f || !out_count) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    const dmaxsat::Count c =
        engine == DMAXSAT_ENGINE_BRUTE
            ? dmaxsat::count_bruteforce(f->value,
                                        brute_limit ? brute_limit : dmaxsat::kDefaultBruteforceLimit)
            : dmaxsat::count_fast(f->value);
    *out_count = dup_string(dmaxsat::to_string(c));
  });
}

dmaxsat_status dmaxsat_threshold(const dmaxsat_formula* f, dmaxsat_engine engine,
                                 uint32_t brute_limit, const char* bound, int* out_holds) {
  if (!f || !bound || !out_holds) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    const dmaxsat::Count b = dmaxsat::parse_count(bound);
    *out_holds = engine == DMAXSAT_ENGINE_BRUTE
                     ? dmaxsat::count_bruteforce(
                           f->value, brute_limit ? brute_limit : dmaxsat::kDefaultBruteforceLimit) >= b
                     : dmaxsat::threshold_check(f->value, b);
  });
}

dmaxsat_status dmaxsat_pack(const dmaxsat_formula* const* operands, size_t count,
                            dmaxsat_formula** out) {
  if (!operands || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    std::vector<dmaxsat::Formula> fs;
    for (size_t i = 0; i < count; ++i) {
      require(operands[i], "operand");
      fs.push_back(operands[i]->value);
    }
    *out = new dmaxsat_formula{dmaxsat::pack_many(fs).formula};
  });
}

dmaxsat_status dmaxsat_less_than(uint32_t n, const char* c, dmaxsat_formula** out) {
  if (!c || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] { *out = new dmaxsat_formula{dmaxsat::less_than_const(n, dmaxsat::parse_count(c))}; });
}

dmaxsat_status dmaxsat_psi(const dmaxsat_formula* f, const char* delta, dmaxsat_formula** out) {
  if (!f || !delta || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    *out = new dmaxsat_formula{dmaxsat::psi_gadget(f->value, dmaxsat::parse_count(delta))};
  });
}

dmaxsat_status dmaxsat_k_value(uint32_t n, const char* delta, const char* x, char** out_value) {
  if (!delta || !x || !out_value) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    *out_value = dup_string(dmaxsat::to_string(
        dmaxsat::k_value(n, dmaxsat::parse_count(delta), dmaxsat::parse_count(x))));
  });
}

dmaxsat_status dmaxsat_eq_to_geq(const dmaxsat_formula* h, const char* y, dmaxsat_query** out) {
  if (!h || !y || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    const dmaxsat::EqToGeq r = dmaxsat::eq_to_geq(h->value, dmaxsat::parse_count(y));
    *out = new dmaxsat_query{r.query, dmaxsat::audit_jsonl(r)};
  });
}

dmaxsat_status dmaxsat_combine(const dmaxsat_formula* const* formulas, const char* const* claims,
                               size_t count, dmaxsat_query** out) {
  if (!formulas || !claims || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    std::vector<dmaxsat::EqualityQuery> qs;
    for (size_t i = 0; i < count; ++i) {
      require(formulas[i], "formula");
      require(claims[i], "claim");
      qs.push_back({formulas[i]->value, dmaxsat::parse_count(claims[i])});
    }
    const dmaxsat::CombinedQuery r = dmaxsat::combine_equalities(qs);
    *out = new dmaxsat_query{r.threshold.query, dmaxsat::audit_jsonl(r)};
  });
}

void dmaxsat_query_free(dmaxsat_query* q) { delete q; }

dmaxsat_status dmaxsat_query_formula(const dmaxsat_query* q, dmaxsat_formula** out) {
  if (!q || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] { *out = new dmaxsat_formula{q->value.formula}; });
}

dmaxsat_status dmaxsat_query_bound(const dmaxsat_query* q, char** out) {
  if (!q || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] { *out = dup_string(dmaxsat::to_string(q->value.bound)); });
}

dmaxsat_status dmaxsat_query_audit(const dmaxsat_query* q, char** out) {
  if (!q || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] { *out = dup_string(q->audit); });
}

dmaxsat_status dmaxsat_query_verify(const dmaxsat_query* q, int* out_holds) {
  if (!q || !out_holds) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] { *out_holds = dmaxsat::verify_threshold(q->value); });
}

dmaxsat_status dmaxsat_instance_new(const dmaxsat_formula* f, const char* blocks,
                                    const char* bound, dmaxsat_instance** out) {
  if (!f || !blocks || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    std::optional<dmaxsat::Count> b;
    if (bound) b = dmaxsat::parse_count(bound);
    *out = new dmaxsat_instance{dmaxsat::SplitInstance::from_blocks(f->value, blocks, b)};
  });
}

void dmaxsat_instance_free(dmaxsat_instance* inst) { delete inst; }

dmaxsat_status dmaxsat_dmax(const dmaxsat_instance* inst, int pruned, dmaxsat_witness** out) {
  if (!inst || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    auto w = pruned ? dmaxsat::dmax_pruned(inst->value) : dmaxsat::dmax_decide(inst->value);
    *out = nullptr;
    if (w) {
      std::string text = dmaxsat::format_assignment(inst->value, w->x_values);
      *out = new dmaxsat_witness{std::move(*w), std::move(text)};
    }
  });
}

dmaxsat_status dmaxsat_maxcount(const dmaxsat_instance* inst, dmaxsat_witness** out) {
  if (!inst || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    auto w = dmaxsat::max_count(inst->value);
    std::string text = dmaxsat::format_assignment(inst->value, w.x_values);
    *out = new dmaxsat_witness{std::move(w), std::move(text)};
  });
}

void dmaxsat_witness_free(dmaxsat_witness* w) { delete w; }

dmaxsat_status dmaxsat_witness_assignment(const dmaxsat_witness* w, char** out) {
  if (!w || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] { *out = dup_string(w->assignment); });
}

dmaxsat_status dmaxsat_witness_count(const dmaxsat_witness* w, char** out) {
  if (!w || !out) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] { *out = dup_string(dmaxsat::to_string(w->value.achieved)); });
}

dmaxsat_status dmaxsat_selftest(uint64_t seed, int64_t budget, dmaxsat_mutation mutation,
                                char** out_report, int* out_passed) {
  if (!out_report || !out_passed) return fail(DMAXSAT_ERR_INVALID_ARGUMENT, "null argument");
  return call([&] {
    dmaxsat::SelftestOptions options;
    options.seed = seed;
    if (budget >= 0) options.budget = static_cast<std::uint64_t>(budget);
    if (mutation == DMAXSAT_MUTATION_PACK_PAIR) options.pack_pair_impl = dmaxsat::corrupted_pack_pair;
    const dmaxsat::SelftestReport report = dmaxsat::run_selftest(options);
    *out_report = dup_string(report.text());
    *out_passed = report.passed();
  });
}

}  // extern "C"
