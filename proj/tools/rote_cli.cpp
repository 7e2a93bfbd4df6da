// Command-line front end over the rotewords C API.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotewords.h"

using nlohmann::json;

namespace {

int status_exit(rw_status st) {
  if (st == RW_OK) return 0;
  std::fprintf(stderr, "error: %s\n", rw_last_error());
  return st == RW_ERR_SCOPE ? 3 : 2;
}

struct SpecHandle {
  rw_spec* ptr = nullptr;
  ~SpecHandle() { rw_spec_free(ptr); }
};

struct CString {
  char* ptr = nullptr;
  ~CString() { rw_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int parse_spec(const std::string& text, SpecHandle& spec) {
  return status_exit(rw_spec_parse(text.c_str(), &spec.ptr));
}

std::string exponent_line(const json& j) {
  std::string line = j["pretty"].get<std::string>();
  line += " \xE2\x89\x88 " + j["decimal"].get<std::string>();
  if (j["truncated"].get<bool>()) {
    line += ", lower bound (finite directive)";
  } else if (j["attained"].get<bool>()) {
    line += ", attained (" + j["witness"]["set"].get<std::string>() + " at level " +
            std::to_string(j["witness"]["level"].get<uint64_t>()) + ")";
  } else {
    line += ", not attained";
    if (!j["limit_of"].is_null())
      line += " (limit of " + j["limit_of"]["set"].get<std::string>() + ")";
  }
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical exponents and recurrence functions of CS Rote sequences"};
  app.require_subcommand(1);

  std::string spec_text;
  uint64_t length = 0, n_value = 0, n_max = 0;
  bool rote = false, as_json = false, sturmian = false;
  int v0 = 0;
  uint32_t depth = 8;
  uint32_t max_pre = 0, max_period = 2, max_a = 2;
  std::string start_filter = "both";

  auto* gen = app.add_subcommand("gen", "print a Sturmian or Rote prefix");
  gen->add_option("spec", spec_text)->required();
  gen->add_option("length", length)->required();
  gen->add_flag("--rote", rote, "generate the associated Rote sequence");
  gen->add_option("--v0", v0, "first letter of the Rote sequence")->check(CLI::Range(0, 1));

  int digits = 10;
  auto* cr = app.add_subcommand("cr", "critical exponent of the CS Rote sequence");
  cr->add_option("spec", spec_text)->required();
  cr->add_flag("--json", as_json);
  cr->add_flag("--sturmian", sturmian, "critical exponent of the Sturmian sequence instead");
  cr->add_option("--digits", digits, "decimal digits to print")->check(CLI::Range(0, 2000));

  auto* rec = app.add_subcommand("rec", "recurrence function value or table");
  rec->add_option("spec", spec_text)->required();
  rec->add_option("n", n_value, "report R_v(n+1) for this n");
  rec->add_option("--table", n_max, "piecewise table covering n = 1..n_max");
  rec->add_flag("--json", as_json);
  rec->add_flag("--sturmian", sturmian, "Sturmian recurrence R_u(n) instead");

  auto* bs = app.add_subcommand("bispecial", "arithmetic record of the n-th bispecial factor");
  bs->add_option("spec", spec_text)->required();
  bs->add_option("n", n_value)->required();

  auto* rets = app.add_subcommand("returns", "Rote return triple at the n-th bispecial");
  rets->add_option("spec", spec_text)->required();
  rets->add_option("n", n_value)->required();

  auto* cls = app.add_subcommand("classify", "small-exponent family of the spec, if any");
  cls->add_option("spec", spec_text)->required();
  cls->add_flag("--json", as_json);

  auto* seven = app.add_subcommand("below72", "block test for critical exponent < 7/2");
  seven->add_option("spec", spec_text)->required();
  seven->add_flag("--json", as_json);

  auto* conv = app.add_subcommand("convergents", "CSV of convergents up to row n_max");
  conv->add_option("spec", spec_text)->required();
  conv->add_option("n_max", n_max)->required();

  auto* sweep = app.add_subcommand("sweep", "critical exponents over a family of specs");
  sweep->add_option("--max-pre", max_pre, "max preperiod length");
  sweep->add_option("--max-period", max_period, "max period length");
  sweep->add_option("--max-a", max_a, "max exponent value");
  sweep->add_option("--start", start_filter)->check(CLI::IsMember({"G", "D", "both"}));

  auto* verify = app.add_subcommand("verify", "run the oracle-vs-formula suite");
  verify->add_option("spec", spec_text)->required();
  verify->add_option("--depth", depth, "bounds bispecial indices and prefix sizes");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    CString out;
    rw_status st = rw_generate(spec.ptr, length, rote ? 1 : 0, v0, &out.ptr);
    if (st != RW_OK) return status_exit(st);
    std::printf("%s\n", out.ptr);
    return 0;
  }

  if (cr->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    CString out;
    rw_status st = sturmian ? rw_sturmian_critical_exponent(spec.ptr, &out.ptr)
                            : rw_critical_exponent(spec.ptr, &out.ptr);
    if (st != RW_OK) return status_exit(st);
    if (as_json) {
      std::printf("%s\n", out.ptr);
      return 0;
    }
    json j = json::parse(out.str());
    if (digits != 10) {
      CString dec;
      const auto& s = j["surd"];
      rw_status ds = rw_surd_decimal(s["a"].get<std::string>().c_str(),
                                     s["b"].get<std::string>().c_str(),
                                     s["c"].get<std::string>().c_str(),
                                     s["d"].get<std::string>().c_str(), digits, &dec.ptr);
      if (ds != RW_OK) return status_exit(ds);
      j["decimal"] = dec.str();
    }
    std::printf("%s\n", exponent_line(j).c_str());
    return 0;
  }

  if (rec->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    if (n_max > 0 && sturmian) {
      std::fprintf(stderr, "error: --table prints the Rote table; drop --sturmian\n");
      return 2;
    }
    if (n_max > 0) {
      CString out;
      rw_status st = rw_recurrence_table_csv(spec.ptr, n_max, &out.ptr);
      if (st != RW_OK) return status_exit(st);
      std::printf("%s", out.ptr);
      return 0;
    }
    if (n_value == 0) {
      std::fprintf(stderr, "error: rec needs n or --table n_max\n");
      return 2;
    }
    CString out;
    rw_status st = sturmian ? rw_sturmian_recurrence(spec.ptr, n_value, &out.ptr)
                            : rw_rote_recurrence(spec.ptr, n_value, &out.ptr);
    if (st != RW_OK) return status_exit(st);
    if (as_json) {
      json j{{"spec", spec_text}, {"n", n_value}, {"value", out.str()}};
      std::printf("%s\n", j.dump().c_str());
    } else {
      std::printf("%s\n", out.ptr);
    }
    return 0;
  }

  if (bs->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    CString out;
    rw_status st = rw_bispecial(spec.ptr, n_value, &out.ptr);
    if (st != RW_OK) return status_exit(st);
    std::printf("%s\n", out.ptr);
    return 0;
  }

  if (rets->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    CString out;
    rw_status st = rw_return_triple(spec.ptr, n_value, &out.ptr);
    if (st != RW_OK) return status_exit(st);
    std::printf("%s\n", out.ptr);
    return 0;
  }

  if (cls->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    int family = 0;
    rw_status st = rw_classify_small(spec.ptr, &family);
    if (st != RW_OK) return status_exit(st);
    CString cr_out;
    st = rw_critical_exponent(spec.ptr, &cr_out.ptr);
    if (st != RW_OK) return status_exit(st);
    json j = json::parse(cr_out.str());
    if (as_json) {
      json out{{"spec", spec_text}, {"family", family}, {"cr", j}};
      std::printf("%s\n", out.dump().c_str());
    } else if (family > 0) {
      std::printf("family %d, critical exponent %s\n", family, exponent_line(j).c_str());
    } else {
      std::printf("none (critical exponent %s)\n", exponent_line(j).c_str());
    }
    return 0;
  }

  if (seven->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    CString out;
    rw_status st = rw_below_seven_halves(spec.ptr, &out.ptr);
    if (st != RW_OK) return status_exit(st);
    if (as_json) {
      std::printf("%s\n", out.ptr);
    } else {
      json j = json::parse(out.str());
      std::printf("%s\n", j["verdict"].get<bool>() ? "below 7/2" : "not below 7/2");
    }
    return 0;
  }

  if (conv->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    CString out;
    rw_status st = rw_convergents_csv(spec.ptr, static_cast<int64_t>(n_max), &out.ptr);
    if (st != RW_OK) return status_exit(st);
    std::printf("%s", out.ptr);
    return 0;
  }

  if (sweep->parsed()) {
    int filter = start_filter == "G" ? 0 : start_filter == "D" ? 1 : -1;
    CString out;
    rw_status st = rw_sweep_csv(max_pre, max_period, max_a, filter, &out.ptr);
    if (st != RW_OK) return status_exit(st);
    std::printf("%s", out.ptr);
    return 0;
  }

  if (verify->parsed()) {
    SpecHandle spec;
    if (int rc = parse_spec(spec_text, spec)) return rc;
    CString out;
    int all_pass = 0;
    rw_status st = rw_verify(spec.ptr, depth, &out.ptr, &all_pass);
    if (st != RW_OK) return status_exit(st);
    json arr = json::parse(out.str());
    for (const auto& item : arr) {
      std::printf("%s %s%s%s\n", item["pass"].get<bool>() ? "pass" : "FAIL",
                  item["check"].get<std::string>().c_str(),
                  item["detail"].get<std::string>().empty() ? "" : ": ",
                  item["detail"].get<std::string>().c_str());
    }
    return all_pass ? 0 : 1;
  }

  return 2;
}
