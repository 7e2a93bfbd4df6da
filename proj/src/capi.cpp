#include "rotewords.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "convergents.hpp"
#include "directive.hpp"
#include "errors.hpp"
#include "exponent.hpp"
#include "recurrence.hpp"
#include "rote.hpp"
#include "sturmian.hpp"
#include "verify.hpp"

using nlohmann::json;

struct rw_spec {
  rw::DirectiveSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
rw_status guarded(Fn&& fn) {
  try {
    fn();
    return RW_OK;
  } catch (const rw::ParseError& e) {
    g_last_error = e.what();
    return RW_ERR_PARSE;
  } catch (const rw::ModeError& e) {
    g_last_error = e.what();
    return RW_ERR_MODE;
  } catch (const rw::ScopeError& e) {
    g_last_error = e.what();
    return RW_ERR_SCOPE;
  } catch (const rw::InsufficientDirectiveError& e) {
    g_last_error = e.what();
    return RW_ERR_TRUNCATION;
  } catch (const rw::TruncationError& e) {
    g_last_error = e.what();
    return RW_ERR_TRUNCATION;
  } catch (const rw::InsufficientDataError& e) {
    g_last_error = e.what();
    return RW_ERR_INSUFFICIENT_DATA;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return RW_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RW_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RW_ERR_INTERNAL;
  }
}

json surd_json(const rw::Surd& v) {
  return json{{"a", v.a().to_decimal()},
              {"b", v.b().to_decimal()},
              {"c", v.c().to_decimal()},
              {"d", v.d().to_decimal()}};
}

json exponent_json(const rw::DirectiveSpec& spec, const rw::ExponentValue& v) {
  json j;
  j["spec"] = spec.render();
  j["surd"] = surd_json(v.value);
  j["pretty"] = v.value.to_string();
  j["decimal"] = v.value.to_decimal(10);
  j["attained"] = v.attained;
  j["truncated"] = v.truncated;
  if (v.witness) {
    j["witness"] = {{"set", rw::term_tag_name(v.witness->tag)}, {"level", v.witness->level}};
  } else {
    j["witness"] = nullptr;
  }
  if (v.limit_of) {
    j["limit_of"] = {{"set", rw::term_tag_name(v.limit_of->tag)},
                     {"level", v.limit_of->level}};
  } else {
    j["limit_of"] = nullptr;
  }
  return j;
}

json parikh_json(const rw::BigParikh& p) {
  return json::array({p.zeros.to_decimal(), p.ones.to_decimal()});
}

}  // namespace

extern "C" {

const char* rw_last_error(void) { return g_last_error.c_str(); }

void rw_string_free(char* s) { delete[] s; }

rw_status rw_spec_parse(const char* text, rw_spec** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) throw std::invalid_argument("null argument");
    *out = new rw_spec{rw::DirectiveSpec::parse(text)};
  });
}

void rw_spec_free(rw_spec* spec) { delete spec; }

rw_status rw_spec_render(const rw_spec* spec, char** out) {
  return guarded([&] { *out = dup_string(spec->spec.render()); });
}

rw_status rw_spec_canonical(const rw_spec* spec, char** out) {
  return guarded([&] { *out = dup_string(spec->spec.canonical().render()); });
}

rw_status rw_generate(const rw_spec* spec, uint64_t length, int rote, int v0, char** out) {
  return guarded([&] {
    if (rote) {
      if (length == 0) throw std::domain_error("rw_generate: length must be >= 1");
      rw::BinaryWord u = length == 1 ? rw::BinaryWord()
                                     : rw::generate_prefix(spec->spec, length - 1);
      *out = dup_string(rw::rote_from_sturmian(u, v0 ? 1 : 0).to_string());
    } else {
      *out = dup_string(rw::generate_prefix(spec->spec, length).to_string());
    }
  });
}

rw_status rw_critical_exponent(const rw_spec* spec, char** json_out) {
  return guarded([&] {
    rw::ExponentValue v = rw::critical_exponent(spec->spec);
    *json_out = dup_string(exponent_json(spec->spec, v).dump());
  });
}

rw_status rw_sturmian_critical_exponent(const rw_spec* spec, char** json_out) {
  return guarded([&] {
    rw::ExponentValue v = rw::sturmian_critical_exponent(spec->spec);
    *json_out = dup_string(exponent_json(spec->spec, v).dump());
  });
}

rw_status rw_surd_decimal(const char* a, const char* b, const char* c, const char* d,
                          int digits, char** out) {
  return guarded([&] {
    if (digits < 0 || digits > 10000) throw std::domain_error("rw_surd_decimal: bad digit count");
    rw::Surd v(rw::BigInt::from_decimal(a), rw::BigInt::from_decimal(b),
               rw::BigInt::from_decimal(c), rw::BigInt::from_decimal(d));
    *out = dup_string(v.to_decimal(digits));
  });
}

rw_status rw_bispecial(const rw_spec* spec, uint64_t n, char** json_out) {
  return guarded([&] {
    rw::BispecialRecord rec = rw::bispecial(spec->spec, n);
    json j{{"n", rec.n},
           {"N", rec.level},
           {"m", rec.offset},
           {"len_b", rec.len_b.to_decimal()},
           {"len_r", rec.len_r.to_decimal()},
           {"len_s", rec.len_s.to_decimal()},
           {"parikh_b", parikh_json(rec.parikh_b)},
           {"parikh_r", parikh_json(rec.parikh_r)},
           {"parikh_s", parikh_json(rec.parikh_s)},
           {"stable_r", rec.stable_r},
           {"stable_s", rec.stable_s}};
    *json_out = dup_string(j.dump());
  });
}

rw_status rw_return_triple(const rw_spec* spec, uint64_t n, char** json_out) {
  return guarded([&] {
    rw::RoteReturnTriple t = rw::rote_return_triple(spec->spec, n);
    const char* tag = t.case_tag == rw::ReturnCase::RStable    ? "r-stable"
                      : t.case_tag == rw::ReturnCase::SStable ? "s-stable"
                                                               : "both-unstable";
    json j{{"case", tag},
           {"A", t.A.to_string()},
           {"B", t.B.to_string()},
           {"C", t.C.to_string()},
           {"lengths", json::array({t.A.size(), t.B.size(), t.C.size()})}};
    *json_out = dup_string(j.dump());
  });
}

rw_status rw_shortest_bispecials(const rw_spec* spec, uint64_t n, char** json_out) {
  return guarded([&] {
    rw::ShortestBispecialSet set = rw::shortest_bispecials(spec->spec, n);
    json j{{"n", set.n},
           {"level", set.level},
           {"m", set.m},
           {"prev_is_bispecial_length", set.prev_is_bispecial_length},
           {"members", set.members}};
    *json_out = dup_string(j.dump());
  });
}

rw_status rw_rote_recurrence(const rw_spec* spec, uint64_t n, char** decimal_out) {
  return guarded(
      [&] { *decimal_out = dup_string(rw::rote_recurrence(spec->spec, n).to_decimal()); });
}

rw_status rw_sturmian_recurrence(const rw_spec* spec, uint64_t n, char** decimal_out) {
  return guarded(
      [&] { *decimal_out = dup_string(rw::sturmian_recurrence(spec->spec, n).to_decimal()); });
}

rw_status rw_recurrence_table_csv(const rw_spec* spec, uint64_t n_max, char** csv_out) {
  return guarded([&] {
    *csv_out = dup_string(rw::recurrence_table_csv(rw::recurrence_table(spec->spec, n_max)));
  });
}

rw_status rw_convergents_csv(const rw_spec* spec, int64_t n_max, char** csv_out) {
  return guarded([&] {
    if (n_max < 0) throw std::domain_error("rw_convergents_csv: n_max must be >= 0");
    rw::ConvergentTable t(spec->spec, n_max);
    *csv_out = dup_string(t.to_csv());
  });
}

rw_status rw_classify_small(const rw_spec* spec, int* family_out) {
  return guarded([&] {
    auto family = rw::classify_small(spec->spec);
    *family_out = family ? *family : 0;
  });
}

rw_status rw_below_seven_halves(const rw_spec* spec, char** json_out) {
  return guarded([&] {
    rw::BlockParse parse = rw::below_seven_halves(spec->spec);
    json blocks = json::array();
    for (const auto& b : parse.blocks) {
      blocks.push_back(
          {{"tag", b.tag}, {"content", b.content}, {"repeats_forever", b.repeats_forever}});
    }
    json j{{"verdict", parse.verdict}, {"blocks", blocks}};
    *json_out = dup_string(j.dump());
  });
}

rw_status rw_sweep_csv(uint32_t max_preperiod, uint32_t max_period, uint32_t max_exponent,
                       int start_filter, char** csv_out) {
  return guarded([&] {
    if (max_period == 0) throw std::domain_error("rw_sweep_csv: max_period must be >= 1");
    if (max_exponent == 0) throw std::domain_error("rw_sweep_csv: max_exponent must be >= 1");
    rw::SweepBounds bounds{max_preperiod, max_period, max_exponent, start_filter};
    *csv_out = dup_string(rw::sweep_csv(rw::exponent_sweep(bounds)));
  });
}

rw_status rw_verify(const rw_spec* spec, uint32_t depth, char** json_out, int* all_pass) {
  return guarded([&] {
    std::vector<rw::CheckResult> results = rw::verify_spec(spec->spec, depth);
    json arr = json::array();
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.pass;
      arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    *json_out = dup_string(arr.dump());
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
