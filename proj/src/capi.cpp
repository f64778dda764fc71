#include "chirocalc/chirocalc.h"

#include <cstring>
#include <json.hpp>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "chiro/analytics.hpp"
#include "chiro/chirotope.hpp"
#include "chiro/double_circle.hpp"
#include "chiro/expr.hpp"
#include "chiro/formats.hpp"
#include "chiro/order_types.hpp"
#include "chiro/polycalc.hpp"
#include "chiro/search.hpp"

using namespace chiro;

struct chc_context {
  EvalOptions eval;
  int threads = 1;
  int digits = static_cast<int>(kDefaultDigits);
  std::string last_error;
};

struct chc_chirotope {
  Chirotope chi;
  std::optional<Label> root;
};

struct chc_poly {
  BivarPoly p;
};

namespace {

chc_status status_of(Errc e) {
  switch (e) {
    case Errc::GeneralPositionViolation: return CHC_E_GENERAL_POSITION;
    case Errc::TooSmall: return CHC_E_TOO_SMALL;
    case Errc::InvalidTriple: return CHC_E_INVALID_TRIPLE;
    case Errc::NotARootedChirotope: return CHC_E_NOT_ROOTED;
    case Errc::SharedEndpoint: return CHC_E_SHARED_ENDPOINT;
    case Errc::OracleTooLarge: return CHC_E_ORACLE_TOO_LARGE;
    case Errc::InternalInvariantViolation: return CHC_E_INVARIANT;
    case Errc::EmptyInput: return CHC_E_EMPTY_INPUT;
    case Errc::OutOfRange: return CHC_E_OUT_OF_RANGE;
    case Errc::TooLarge: return CHC_E_TOO_LARGE;
    case Errc::ConstructionFailed: return CHC_E_CONSTRUCTION_FAILED;
    case Errc::NumericalInstability: return CHC_E_NUMERICAL;
    case Errc::MalformedFile: return CHC_E_MALFORMED_FILE;
    case Errc::ParseError: return CHC_E_PARSE;
    case Errc::UnknownIdentifier: return CHC_E_UNKNOWN_IDENTIFIER;
    case Errc::BadArity: return CHC_E_BAD_ARITY;
    case Errc::IoError: return CHC_E_IO;
  }
  return CHC_E_INTERNAL;
}

struct InvalidArgument {
  std::string what;
};

template <class F>
chc_status guarded(chc_context* ctx, F&& f) {
  if (!ctx) return CHC_E_INVALID_ARGUMENT;
  try {
    f();
    ctx->last_error.clear();
    return CHC_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const InvalidArgument& e) {
    ctx->last_error = e.what;
    return CHC_E_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return CHC_E_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return CHC_E_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw InvalidArgument{what};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

RootedChirotope rooted(const chc_chirotope* c) {
  if (!c->root) fail(Errc::NotARootedChirotope, "chirotope has no root");
  return RootedChirotope(c->chi, *c->root);
}

// load("file") of an unrooted file: counted as a plain chirotope.
std::optional<Chirotope> unrooted_load(const Expr& e) {
  if (e.kind != Expr::Kind::Load || e.root) return std::nullopt;
  ChiFile f = load_chirotope_file(e.path);
  if (f.root) return std::nullopt;
  return std::move(f.chi);
}

Real parse_real(const std::string& text) {
  const Rational q = parse_rational(text);
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

}  // namespace

extern "C" {

chc_context* chc_context_new(void) { return new (std::nothrow) chc_context(); }
void chc_context_free(chc_context* ctx) { delete ctx; }

chc_status chc_set_oracle_cap(chc_context* ctx, int cap) {
  return guarded(ctx, [&] {
    require(cap >= 3 && cap <= kOracleHardLimit, "oracle cap must be within 3..22");
    ctx->eval.enumeration.oracle_cap = cap;
  });
}

chc_status chc_set_threads(chc_context* ctx, int threads) {
  return guarded(ctx, [&] {
    require(threads >= 1 && threads <= 1024, "thread count must be within 1..1024");
    ctx->threads = threads;
  });
}

chc_status chc_set_precision(chc_context* ctx, int digits) {
  return guarded(ctx, [&] {
    require(digits >= 20 && digits <= 10000, "precision must be within 20..10000 digits");
    ctx->digits = digits;
  });
}

const char* chc_last_error(const chc_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* chc_status_name(chc_status s) {
  switch (s) {
    case CHC_OK: return "Ok";
    case CHC_E_INVALID_ARGUMENT: return "InvalidArgument";
    case CHC_E_INTERNAL: return "Internal";
    default: break;
  }
  for (int e = 0; e <= static_cast<int>(Errc::IoError); ++e)
    if (status_of(static_cast<Errc>(e)) == s) return errc_name(static_cast<Errc>(e)).data();
  return "Unknown";
}

void chc_string_free(char* s) { std::free(s); }

chc_status chc_chirotope_load(chc_context* ctx, const char* path, int root, chc_chirotope** out) {
  return guarded(ctx, [&] {
    require(path && out, "null argument");
    ChiFile f = load_chirotope_file(path);
    std::optional<Label> r = root >= 0 ? std::optional<Label>(root) : f.root;
    if (r) (void)RootedChirotope(f.chi, *r);
    *out = new chc_chirotope{std::move(f.chi), r};
  });
}

chc_status chc_chirotope_eval(chc_context* ctx, const char* expr, chc_chirotope** out) {
  return guarded(ctx, [&] {
    require(expr && out, "null argument");
    RootedChirotope rc = eval_materialize(*parse_expr(expr), ctx->eval);
    *out = new chc_chirotope{rc.chi(), rc.root()};
  });
}

void chc_chirotope_free(chc_chirotope* chi) { delete chi; }
int chc_chirotope_size(const chc_chirotope* chi) { return chi ? chi->chi.size() : -1; }
int chc_chirotope_root(const chc_chirotope* chi) { return chi && chi->root ? *chi->root : -1; }

chc_status chc_chirotope_sign(chc_context* ctx, const chc_chirotope* chi, int x, int y, int z, int* sign) {
  return guarded(ctx, [&] {
    require(chi && sign, "null argument");
    *sign = to_int(chi->chi.sign(x, y, z));
  });
}

chc_status chc_chirotope_write(chc_context* ctx, const chc_chirotope* chi, char** text) {
  return guarded(ctx, [&] {
    require(chi && text, "null argument");
    *text = dup(write_chi(chi->chi, chi->root));
  });
}

chc_status chc_check_axioms(chc_context* ctx, const chc_chirotope* chi, int* ok, char** report) {
  return guarded(ctx, [&] {
    require(chi && ok, "null argument");
    const AxiomReport r = check_axioms(chi->chi);
    *ok = r.ok() ? 1 : 0;
    if (report) {
      nlohmann::json j;
      j["ok"] = r.ok();
      j["interiority"] = r.interiority;
      j["transitivity"] = r.transitivity;
      *report = dup(j.dump());
    }
  });
}

chc_status chc_count_chirotope(chc_context* ctx, const chc_chirotope* chi, int drop_root, char** count) {
  return guarded(ctx, [&] {
    require(chi && count, "null argument");
    if (drop_root) {
      *count = dup(count_triangulations(chiro::drop_root(rooted(chi)).chi, ctx->eval.enumeration).get_str());
    } else {
      *count = dup(count_triangulations(chi->chi, ctx->eval.enumeration).get_str());
    }
  });
}

chc_status chc_count_expr(chc_context* ctx, const char* expr, chc_method method, int drop_root, int weak,
                          char** count) {
  return guarded(ctx, [&] {
    require(expr && count, "null argument");
    require(method == CHC_METHOD_BRUTE || method == CHC_METHOD_POLY, "unknown method");
    const ExprPtr e = parse_expr(expr);
    const EnumOptions& eo = ctx->eval.enumeration;
    if (method == CHC_METHOD_POLY) {
      require(!drop_root, "dropping the root needs the brute-force method");
      const mpz_class n = weak ? eval_weak_count(*e, ctx->eval) : q_from_p(eval_polynomial(*e, ctx->eval)).at_one();
      *count = dup(n.get_str());
      return;
    }
    if (auto plain = unrooted_load(*e)) {
      if (drop_root || weak) fail(Errc::NotARootedChirotope, "file gives no root; use load(\"path\", root)");
      *count = dup(count_triangulations(*plain, eo).get_str());
      return;
    }
    const RootedChirotope rc = eval_materialize(*e, ctx->eval);
    mpz_class n;
    if (drop_root)
      n = count_triangulations(chiro::drop_root(rc).chi, eo);
    else if (weak)
      n = count_weak(rc, eo);
    else
      n = count_triangulations(rc.chi(), eo);
    *count = dup(n.get_str());
  });
}

chc_status chc_poly_eval(chc_context* ctx, const char* expr, chc_method method, chc_poly** out) {
  return guarded(ctx, [&] {
    require(expr && out, "null argument");
    require(method == CHC_METHOD_BRUTE || method == CHC_METHOD_POLY, "unknown method");
    const ExprPtr e = parse_expr(expr);
    BivarPoly p = method == CHC_METHOD_POLY ? eval_polynomial(*e, ctx->eval)
                                            : brute_P(eval_materialize(*e, ctx->eval), ctx->eval.enumeration);
    *out = new chc_poly{std::move(p)};
  });
}

void chc_poly_free(chc_poly* p) { delete p; }

chc_status chc_poly_render(chc_context* ctx, const chc_poly* p, chc_which which, chc_format format, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    require(which == CHC_POLY_P || which == CHC_POLY_Q, "unknown polynomial selector");
    require(format == CHC_FORMAT_JSON || format == CHC_FORMAT_TEXT, "polynomials render as json or text");
    if (which == CHC_POLY_P) {
      *out = dup(format == CHC_FORMAT_JSON ? to_json(p->p) : p->p.to_string());
    } else {
      const UnivarPoly q = q_from_p(p->p);
      *out = dup(format == CHC_FORMAT_JSON ? to_json(q) : q.to_string());
    }
  });
}

chc_status chc_poly_total(chc_context* ctx, const chc_poly* p, chc_which which, char** count) {
  return guarded(ctx, [&] {
    require(p && count, "null argument");
    require(which == CHC_POLY_P || which == CHC_POLY_Q, "unknown polynomial selector");
    *count = dup((which == CHC_POLY_P ? p->p.at_one() : q_from_p(p->p).at_one()).get_str());
  });
}

chc_status chc_dc_table(chc_context* ctx, int kmax, chc_format format, char** out) {
  return guarded(ctx, [&] {
    require(out, "null argument");
    require(format == CHC_FORMAT_CSV || format == CHC_FORMAT_JSON, "dc table renders as csv or json");
    if (kmax < 3) fail(Errc::OutOfRange, "dc table needs kmax >= 3");
    PrecisionScope scope(static_cast<unsigned>(ctx->digits));
    const QkTable table(kmax - 1, false);
    std::vector<int> ks;
    for (int k = 3; k <= kmax; ++k) ks.push_back(k);
    const auto rows = asymptotic_report(table, ks);
    if (format == CHC_FORMAT_CSV) {
      std::ostringstream s;
      s << "k,exact,estimate,ratio\n";
      for (const auto& r : rows)
        s << r.k << ',' << r.exact.get_str() << ',' << to_decimal(r.estimate, 15) << ',' << to_decimal(r.ratio, 15)
          << '\n';
      *out = dup(s.str());
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"k", r.k},
                       {"exact", r.exact.get_str()},
                       {"estimate", to_decimal(r.estimate, 15)},
                       {"ratio", to_decimal(r.ratio, 15)}});
      *out = dup(nlohmann::json{{"rows", arr}}.dump() + "\n");
    }
  });
}

chc_status chc_kernel_report(chc_context* ctx, const char* x, int terms, char** json) {
  return guarded(ctx, [&] {
    require(x && json, "null argument");
    if (terms < 1 || terms > 5000) fail(Errc::OutOfRange, "terms must be within 1..5000");
    PrecisionScope scope(static_cast<unsigned>(ctx->digits));
    const Real xr = parse_real(x);
    const KernelPoint kp = small_roots(xr);
    const FValues closed = f_closed(xr);
    const QkTable table(terms, false);
    const FValues series = f_series(table, xr, terms);
    const int d = ctx->digits;
    nlohmann::json j;
    j["x"] = to_decimal(xr, d);
    j["u1"] = to_decimal(kp.u1, d);
    j["u2"] = to_decimal(kp.u2, d);
    j["F_closed"] = to_decimal(closed.F, d);
    j["F_series"] = to_decimal(series.F, d);
    j["dF_closed"] = to_decimal(closed.dF, d);
    j["dF_series"] = to_decimal(series.dF, d);
    j["residuals"] = {{"kernel_u1", to_decimal(abs(kernel(xr, kp.u1)), 6)},
                      {"kernel_u2", to_decimal(abs(kernel(xr, kp.u2)), 6)},
                      {"F", to_decimal(abs(closed.F - series.F), 6)},
                      {"dF", to_decimal(abs(closed.dF - series.dF), 6)}};
    *json = dup(j.dump(2) + "\n");
  });
}

chc_status chc_search(chc_context* ctx, const char* db_path, int n, int width, int levels, int top, chc_metric metric,
                      int lenient, char** csv, char** notes) {
  return guarded(ctx, [&] {
    require(db_path && csv, "null argument");
    require(metric == CHC_METRIC_WEAK || metric == CHC_METRIC_COUNT, "unknown metric");
    const LoadedPointSets loaded = load_order_types(db_path, n, width, lenient != 0);
    std::vector<Chirotope> records;
    std::vector<std::size_t> index;
    for (const auto& [i, ps] : loaded.valid) {
      records.push_back(chirotope_from_points(ps));
      index.push_back(i);
    }
    SearchOptions opt;
    opt.levels = levels;
    opt.metric = metric == CHC_METRIC_WEAK ? SearchMetric::Weak : SearchMetric::Count;
    opt.threads = ctx->threads;
    opt.enumeration = ctx->eval.enumeration;
    auto rows = koch_variant_search(records, opt);
    for (auto& r : rows) r.record = index[r.record];
    *csv = dup(search_csv(rows, top));
    if (notes) {
      std::string s;
      for (const auto& [i, why] : loaded.rejected) s += "skipped " + why + "\n";
      *notes = dup(s);
    }
  });
}

}  // extern "C"
