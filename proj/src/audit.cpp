#include "liecert/audit.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "liecert/classical.hpp"
#include "liecert/embeddings.hpp"
#include "liecert/liealg.hpp"
#include "liecert/repmod.hpp"

namespace liecert::audit {

using json = nlohmann::ordered_json;

const char* to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebras", "embeddings", "centralizers", "decomposition",
                                              "forms",    "schur",      "dims",         "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

constexpr std::size_t kExhaustiveJacobiDim = 40;
constexpr std::size_t kRandomJacobiTriples = 1000;
constexpr const char* kNeedsThree = "requires n >= 3";

std::string weight_string(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string summands_string(const std::vector<IrreducibleSummand>& summands) {
  std::string s;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) s += " + ";
    s += weight_string(summands[i].highest_weight) + "x" + std::to_string(summands[i].multiplicity) + "[dim " +
         std::to_string(summands[i].dim_each) + "]";
  }
  return s;
}

json summands_json(const std::vector<IrreducibleSummand>& summands) {
  json arr = json::array();
  for (const auto& s : summands)
    arr.push_back({{"highest_weight", s.highest_weight}, {"multiplicity", s.multiplicity}, {"dim_each", s.dim_each}});
  return arr;
}

json counterexample_json(const Certificate& c) {
  if (!c.counterexample) return json{{"checks", c.checks}};
  const auto& ce = *c.counterexample;
  return json{{"kind", ce.kind}, {"i", ce.i}, {"j", ce.j}, {"detail", ce.detail}, {"checks", c.checks}};
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

/// Lazily built objects shared by the checks of one rank.
class Context {
public:
  explicit Context(std::size_t n) : n(n) {}
  const std::size_t n;

  const MatLieAlgebra& sp() { return get(sp_, [&] { return sp_algebra(n); }); }
  const MatLieAlgebra& so() { return get(so_, [&] { return so_split_algebra(2 * n); }); }
  const MatLieAlgebra& sp_succ() { return get(sp_succ_, [&] { return sp_algebra(n + 1); }); }
  const Embedding& emb_so() { return get(emb_so_, [&] { return embed_sp_in_so(n); }); }
  const Embedding& emb_so1() { return get(emb_so1_, [&] { return embed_sp_sp1_in_so(n); }); }
  const Embedding& emb_succ() { return get(emb_succ_, [&] { return embed_sp_sp1_in_sp_succ(n); }); }
  const SymmetricSplit& split() { return get(split_, [&] { return symmetric_split(n); }); }
  const RootDatum& rd_sp() { return get(rd_sp_, [&] { return sp_root_datum(n); }); }
  const RootDatum& rd_sp_sp1() {
    return get(rd_sp_sp1_, [&] { return direct_sum_root_datum(rd_sp(), 2 * n, sp_root_datum(1), 2); });
  }
  const std::vector<Matrix>& centralizer_so() {
    return get(cent_so_, [&] { return centralizer_in(so(), emb_so().images()); });
  }

private:
  template <class T, class F>
  const T& get(std::optional<T>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }
  std::optional<MatLieAlgebra> sp_, so_, sp_succ_;
  std::optional<Embedding> emb_so_, emb_so1_, emb_succ_;
  std::optional<SymmetricSplit> split_;
  std::optional<RootDatum> rd_sp_, rd_sp_sp1_;
  std::optional<std::vector<Matrix>> cent_so_;
};

CheckResult result(std::string name, std::size_t n, bool ok, std::string expected, std::string actual,
                   std::string ref, json witness = nullptr) {
  CheckResult r{std::move(name), n, ok ? Status::pass : Status::fail, std::move(expected), std::move(actual),
                std::move(ref), std::move(witness)};
  if (!ok && r.witness.is_null()) r.witness = json{{"actual", r.actual}};
  return r;
}

CheckResult skipped(std::string name, std::size_t n, std::string expected, std::string ref) {
  return {std::move(name), n, Status::skipped, std::move(expected), std::string("skipped: ") + kNeedsThree,
          std::move(ref), nullptr};
}

using CheckFn = std::function<CheckResult()>;

struct CheckSpec {
  std::string name;
  std::string paper_ref;
  CheckFn run;
};

void run_checks(std::vector<CheckResult>& out, std::size_t n, std::vector<CheckSpec> specs) {
  for (auto& s : specs) {
    try {
      out.push_back(s.run());
    } catch (const std::exception& e) {
      out.push_back(result(s.name, n, false, "no exception", std::string("exception: ") + e.what(), s.paper_ref,
                           json{{"exception", e.what()}}));
    }
  }
}

CheckResult jacobi_check(const std::string& name, std::size_t n, const MatLieAlgebra& l, const std::string& ref) {
  const auto& sc = l.structure_constants();
  if (auto bad = find_antisymmetry_violation(sc))
    return result(name, n, false, "antisymmetric structure constants", "antisymmetry fails", ref,
                  json{{"i", (*bad)[0]}, {"j", (*bad)[1]}});
  std::optional<std::array<std::size_t, 3>> bad;
  std::string mode;
  if (l.dim() <= kExhaustiveJacobiDim) {
    bad = find_jacobi_violation(sc);
    mode = "exhaustive";
  } else {
    std::mt19937_64 rng(0x5eed0000ULL + l.dim());
    bad = find_jacobi_violation(sc, kRandomJacobiTriples, rng);
    mode = std::to_string(kRandomJacobiTriples) + " random triples";
  }
  if (bad)
    return result(name, n, false, "Jacobi identity (" + mode + ")", "violated", ref,
                  json{{"i", (*bad)[0]}, {"j", (*bad)[1]}, {"k", (*bad)[2]}});
  return result(name, n, true, "Jacobi identity (" + mode + ")", "holds on dim " + std::to_string(l.dim()), ref);
}

CheckResult certificate_check(const std::string& name, std::size_t n, const Certificate& c, const std::string& ref) {
  return result(name, n, c.ok, "certified", c.ok ? "certified (" + std::to_string(c.checks) + " checks)" : "counterexample",
                ref, c.ok ? json(nullptr) : counterexample_json(c));
}

CheckResult factors_commute_check(const std::string& name, std::size_t n, const Embedding& emb, const std::string& ref) {
  const auto a = emb.factor_images(0);
  const auto b = emb.factor_images(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!bracket(a[i], b[j]).is_zero())
        return result(name, n, false, "all cross brackets vanish", "nonzero cross bracket", ref,
                      json{{"i", i}, {"j", j}});
  return result(name, n, true, "all cross brackets vanish",
                std::to_string(a.size() * b.size()) + " cross brackets vanish", ref);
}

CheckResult decomposition_check(const std::string& name, std::size_t n, const Representation& rep, const RootDatum& rd,
                                const std::vector<IrreducibleSummand>& expected, const std::string& ref) {
  const auto actual = decompose(rep, rd);
  return result(name, n, actual == expected, summands_string(expected), summands_string(actual), ref,
                json{{"degree", rep.degree()}, {"summands", summands_json(actual)}});
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ---------------------------------------------------------------------------
// Suites

void suite_algebras(Context& ctx, std::vector<CheckResult>& out) {
  const std::size_t n = ctx.n;
  run_checks(out, n, {
      {"dim_sp", "dim sp(n) = n(2n+1)",
       [&] {
         const std::size_t want = n * (2 * n + 1);
         return result("dim_sp", n, ctx.sp().dim() == want, std::to_string(want), std::to_string(ctx.sp().dim()),
                       "dim sp(n) = n(2n+1)");
       }},
      {"dim_so_split", "dim so(2n,2n) = C(4n,2)",
       [&] {
         const std::uint64_t want = binomial(4 * n, 2);
         return result("dim_so_split", n, ctx.so().dim() == want, std::to_string(want), std::to_string(ctx.so().dim()),
                       "dim so(2n,2n) = C(4n,2)");
       }},
      {"dim_sp_succ", "dim sp(n+1) = (n+1)(2n+3)",
       [&] {
         const std::size_t want = (n + 1) * (2 * n + 3);
         return result("dim_sp_succ", n, ctx.sp_succ().dim() == want, std::to_string(want),
                       std::to_string(ctx.sp_succ().dim()), "dim sp(n+1) = (n+1)(2n+3)");
       }},
      {"sp_defining_relation", "sp(n) = {M : M^T J~ + J~ M = 0}",
       [&] {
         const Matrix j = symplectic_j(n);
         std::size_t bad = 0;
         for (const auto& x : ctx.sp().basis()) bad += preserves_form(x, j) ? 0 : 1;
         return result("sp_defining_relation", n, bad == 0, "0 violations", std::to_string(bad) + " violations",
                       "sp(n) = {M : M^T J~ + J~ M = 0}");
       }},
      {"so_defining_relation", "so(2n,2n) = {M : M^T J + J M = 0}",
       [&] {
         const Matrix j = split_orthogonal_j(2 * n);
         std::size_t bad = 0;
         for (const auto& x : ctx.so().basis()) bad += preserves_form(x, j) ? 0 : 1;
         return result("so_defining_relation", n, bad == 0, "0 violations", std::to_string(bad) + " violations",
                       "so(2n,2n) = {M : M^T J + J M = 0}");
       }},
      {"sp_jacobi", "sp(n) structure constants",
       [&] { return jacobi_check("sp_jacobi", n, ctx.sp(), "sp(n) structure constants"); }},
      {"so_jacobi", "so(2n,2n) structure constants",
       [&] { return jacobi_check("so_jacobi", n, ctx.so(), "so(2n,2n) structure constants"); }},
      {"killing_trace_ratio_sp", "Killing form of sp(n) is (2n+2) tr(XY)",
       [&] {
         const Matrix k = killing_form(ctx.sp()).gram;
         const Matrix t = trace_form(ctx.sp()).gram;
         const Rational want(static_cast<std::int64_t>(2 * n + 2));
         const bool ok = k == t * want;
         std::optional<Rational> ratio;
         for (std::size_t i = 0; i < t.rows() && !ratio; ++i)
           for (std::size_t j = 0; j < t.cols() && !ratio; ++j)
             if (!t(i, j).is_zero()) ratio = k(i, j) / t(i, j);
         return result("killing_trace_ratio_sp", n, ok, "K = " + want.to_string() + " tr",
                       ok ? "K = " + want.to_string() + " tr"
                          : "not proportional with that constant (first ratio " + (ratio ? ratio->to_string() : "?") + ")",
                       "Killing form of sp(n) is (2n+2) tr(XY)");
       }},
      {"killing_ad_invariance_sp", "Killing form is ad-invariant",
       [&] {
         const auto bad = find_ad_invariance_violation(killing_form(ctx.sp()));
         return result("killing_ad_invariance_sp", n, !bad, "K([x,y],z) + K(y,[x,z]) = 0",
                       bad ? "violated" : "holds on all basis triples", "Killing form is ad-invariant",
                       bad ? json{{"i", (*bad)[0]}, {"j", (*bad)[1]}, {"k", (*bad)[2]}} : json(nullptr));
       }},
      {"killing_nondegenerate_sp", "sp(n) is simple, Killing form nondegenerate",
       [&] {
         const std::size_t r = rank(killing_form(ctx.sp()).gram);
         return result("killing_nondegenerate_sp", n, r == ctx.sp().dim(), "rank " + std::to_string(ctx.sp().dim()),
                       "rank " + std::to_string(r), "sp(n) is simple, Killing form nondegenerate");
       }},
      {"root_datum_sp", "C_n root data for the fundamental weights",
       [&] {
         const auto& rd = ctx.rd_sp();
         const std::string err = validate_root_datum(rd);
         const bool ok = err.empty() && rd.positive_roots.size() == n * n;
         return result("root_datum_sp", n, ok, std::to_string(n * n) + " positive roots, eigenvector relations hold",
                       err.empty() ? std::to_string(rd.positive_roots.size()) + " positive roots, relations hold" : err,
                       "C_n root data for the fundamental weights");
       }},
  });
}

void suite_embeddings(Context& ctx, std::vector<CheckResult>& out) {
  const std::size_t n = ctx.n;
  run_checks(out, n, {
      {"embed_sp_in_so", "block inclusion sp(n) -> so(2n,2n)",
       [&] { return certificate_check("embed_sp_in_so", n, ctx.emb_so().certificate, "block inclusion sp(n) -> so(2n,2n)"); }},
      {"embed_sp_sp1_in_so", "inclusion sp(n)+sp(1) -> so(2n,2n)",
       [&] {
         return certificate_check("embed_sp_sp1_in_so", n, ctx.emb_so1().certificate,
                                  "inclusion sp(n)+sp(1) -> so(2n,2n)");
       }},
      {"embed_sp_sp1_in_so_restriction", "inclusion sp(n)+sp(1) -> so(2n,2n)",
       [&] {
         const bool ok = ctx.emb_so1().factor_images(0) == ctx.emb_so().images();
         return result("embed_sp_sp1_in_so_restriction", n, ok, "sp(n) factor equals the sp(n) inclusion",
                       ok ? "equal entrywise" : "differs", "inclusion sp(n)+sp(1) -> so(2n,2n)");
       }},
      {"embed_sp_sp1_in_so_sp1_sl2", "sp(1) factor lands on the W0 family",
       [&] {
         const auto s = ctx.emb_so1().factor_images(1); // h, e, f
         const bool ok = bracket(s[0], s[1]) == s[1] * Rational(2) && bracket(s[0], s[2]) == s[2] * Rational(-2) &&
                         bracket(s[1], s[2]) == s[0];
         return result("embed_sp_sp1_in_so_sp1_sl2", n, ok, "[h,e]=2e, [h,f]=-2f, [e,f]=h",
                       ok ? "relations hold" : "relations fail", "sp(1) factor lands on the W0 family");
       }},
      {"embed_sp_sp1_in_so_factors_commute", "sp(1) image commutes with every element of the sp(n) image",
       [&] {
         return factors_commute_check("embed_sp_sp1_in_so_factors_commute", n, ctx.emb_so1(),
                                      "sp(1) image commutes with every element of the sp(n) image");
       }},
      {"embed_sp_sp1_in_sp_succ", "sp(n)+sp(1) inside sp(n+1)",
       [&] {
         return certificate_check("embed_sp_sp1_in_sp_succ", n, ctx.emb_succ().certificate,
                                  "sp(n)+sp(1) inside sp(n+1)");
       }},
      {"embed_sp_sp1_in_sp_succ_factors_commute", "sp(n)+sp(1) inside sp(n+1)",
       [&] {
         return factors_commute_check("embed_sp_sp1_in_sp_succ_factors_commute", n, ctx.emb_succ(),
                                      "sp(n)+sp(1) inside sp(n+1)");
       }},
      {"symmetric_pair_sl_sp", "(sl(2n), sp(n)) is a symmetric pair",
       [&] {
         const auto pc = symmetric_pair_check(sl_algebra(2 * n), ctx.sp().basis());
         const bool ok = pc.certificate.ok;
         return result("symmetric_pair_sl_sp", n, ok, "symmetric pair, complement dim " +
                                                          std::to_string(binomial(2 * n, 2) - 1),
                       ok ? "symmetric pair, complement dim " + std::to_string(pc.complement.size()) : "counterexample",
                       "(sl(2n), sp(n)) is a symmetric pair",
                       ok ? json(nullptr) : counterexample_json(pc.certificate));
       }},
  });
}

void suite_centralizers(Context& ctx, std::vector<CheckResult>& out) {
  const std::size_t n = ctx.n;
  run_checks(out, n, {
      {"centralizer_sp_in_so", "W0 commutes with the sp(n) image; parameters a, b, c",
       [&] {
         const std::size_t d = ctx.centralizer_so().size();
         return result("centralizer_sp_in_so", n, d == 3, "dim = 3", "dim = " + std::to_string(d),
                       "W0 commutes with the sp(n) image; parameters a, b, c");
       }},
      {"centralizer_w0_pattern", "W0 block pattern with parameters a, b, c",
       [&] {
         const bool ok = spans_w0_family(n, ctx.centralizer_so());
         return result("centralizer_w0_pattern", n, ok, "span of W0(a,b,c)",
                       ok ? "span of W0(a,b,c)" : "differs from the W0 family", "W0 block pattern with parameters a, b, c");
       }},
      {"centralizer_contains_sp1_image", "sp(1) lies in the centralizer of sp(n) in so(2n,2n)",
       [&] {
         const SpanBasis span(ctx.centralizer_so());
         bool ok = true;
         for (const auto& x : ctx.emb_so1().factor_images(1)) ok = ok && span.contains(x.flat());
         return result("centralizer_contains_sp1_image", n, ok, "sp(1) image inside the centralizer",
                       ok ? "contained" : "not contained", "sp(1) lies in the centralizer of sp(n) in so(2n,2n)");
       }},
      {"centralizer_sp_sp1_in_sp_succ", "centralizer of sp(n)+sp(1) in sp(n+1) is zero",
       [&] {
         const auto c = centralizer_in(ctx.sp_succ(), ctx.emb_succ().images());
         return result("centralizer_sp_sp1_in_sp_succ", n, c.empty(), "dim = 0", "dim = " + std::to_string(c.size()),
                       "centralizer of sp(n)+sp(1) in sp(n+1) is zero");
       }},
  });
}

void suite_decomposition(Context& ctx, std::vector<CheckResult>& out) {
  const std::size_t n = ctx.n;
  const std::vector<int> zero_n(n, 0);
  const std::vector<int> adjoint_hw = [&] {
    std::vector<int> w(n, 0);
    w[0] = 2;
    return w;
  }();
  const std::vector<int> standard_hw = fundamental_weight(n, 1);
  run_checks(out, n, {
      {"decompose_adjoint_so_under_sp", "so(2n,2n) = sp(n) + 3 pi_2 + 3 trivial",
       [&] {
         std::vector<IrreducibleSummand> want{{adjoint_hw, 1, n * (2 * n + 1)}};
         if (n >= 2) want.push_back({fundamental_weight(n, 2), 3, binomial(2 * n, 2) - 1});
         want.push_back({zero_n, 3, 1});
         const auto rep = restriction_representation(ctx.so(), ctx.emb_so(), ActionKind::adjoint);
         return decomposition_check("decompose_adjoint_so_under_sp", n, rep, ctx.rd_sp(), want,
                                    "so(2n,2n) = sp(n) + 3 pi_2 + 3 trivial");
       }},
      {"decompose_weight0_multiplicity", "so(2n,2n) = sp(n) + 3 pi_2 + 3 trivial",
       [&] {
         const auto rep = restriction_representation(ctx.so(), ctx.emb_so(), ActionKind::adjoint);
         const auto wd = weight_decomposition(rep, ctx.rd_sp());
         const std::size_t m0 = wd.multiplicity_of(zero_n);
         return result("decompose_weight0_multiplicity", n, m0 == 4 * n && wd.total == rep.degree(),
                       "weight-0 multiplicity " + std::to_string(4 * n), "weight-0 multiplicity " + std::to_string(m0),
                       "so(2n,2n) = sp(n) + 3 pi_2 + 3 trivial");
       }},
      {"decompose_standard_under_sp", "R^{4n} is R^{2n} + R^{2n} as an sp(n)-module",
       [&] {
         const auto rep = restriction_representation(ctx.so(), ctx.emb_so(), ActionKind::standard);
         return decomposition_check("decompose_standard_under_sp", n, rep, ctx.rd_sp(), {{standard_hw, 2, 2 * n}},
                                    "R^{4n} is R^{2n} + R^{2n} as an sp(n)-module");
       }},
      {"decompose_standard_under_sp_sp1", "R^{2n,2n} is an irreducible sp(n)+sp(1)-module",
       [&] {
         const auto rep = restriction_representation(ctx.so(), ctx.emb_so1(), ActionKind::standard);
         return decomposition_check("decompose_standard_under_sp_sp1", n, rep, ctx.rd_sp_sp1(),
                                    {{concat(standard_hw, {1}), 1, 4 * n}},
                                    "R^{2n,2n} is an irreducible sp(n)+sp(1)-module");
       }},
      {"decompose_complement_under_sp_sp1", "R^{2n,2n} is an irreducible sp(n)+sp(1)-module",
       [&] {
         const auto& split = ctx.split();
         const auto rep = subspace_representation(split.parent, split.embedding, split.complement);
         const auto ev = irreducibility_certificate(rep, ctx.rd_sp_sp1());
         const std::vector<IrreducibleSummand> want{{concat(standard_hw, {1}), 1, 4 * n}};
         const bool ok = ev.irreducible && ev.summands == want && ev.commutant_dim == 1;
         return result("decompose_complement_under_sp_sp1", n, ok, summands_string(want) + ", commutant dim 1",
                       summands_string(ev.summands) + ", commutant dim " + std::to_string(ev.commutant_dim),
                       "R^{2n,2n} is an irreducible sp(n)+sp(1)-module",
                       json{{"summands", summands_json(ev.summands)}, {"commutant_dim", ev.commutant_dim}});
       }},
      {"decompose_sp_succ_under_sp_sp1", "sp(n+1) = sp(n) + sp(1) + R^{2n,2n}",
       [&] {
         const auto rep = restriction_representation(ctx.sp_succ(), ctx.emb_succ(), ActionKind::adjoint);
         const std::vector<IrreducibleSummand> want{{concat(adjoint_hw, {0}), 1, n * (2 * n + 1)},
                                                    {concat(standard_hw, {1}), 1, 4 * n},
                                                    {concat(zero_n, {2}), 1, 3}};
         return decomposition_check("decompose_sp_succ_under_sp_sp1", n, rep, ctx.rd_sp_sp1(), want,
                                    "sp(n+1) = sp(n) + sp(1) + R^{2n,2n}");
       }},
  });
}

void suite_forms(Context& ctx, std::vector<CheckResult>& out) {
  const std::size_t n = ctx.n;
  const std::string split_ref = "sp(n+1) = sp(n) + sp(1) + R^{2n,2n}";
  run_checks(out, n, {
      {"symmetric_split_complement_dim", split_ref,
       [&] {
         const std::size_t d = ctx.split().complement.size();
         return result("symmetric_split_complement_dim", n, d == 4 * n, "dim m = " + std::to_string(4 * n),
                       "dim m = " + std::to_string(d), split_ref);
       }},
      {"symmetric_split_pair", split_ref,
       [&] { return certificate_check("symmetric_split_pair", n, ctx.split().pair.certificate, split_ref); }},
      {"symmetric_split_brackets_span", "[W, W] = G_1 + G_2",
       [&] {
         const auto& s = ctx.split();
         return result("symmetric_split_brackets_span", n, s.pair.complement_brackets_span_subalgebra,
                       "rank [m,m] = " + std::to_string(s.subalgebra.size()),
                       "rank [m,m] = " + std::to_string(s.pair.complement_bracket_rank), "[W, W] = G_1 + G_2");
       }},
      {"symmetric_split_basis", split_ref,
       [&] {
         const bool ok = ctx.split().parent_basis_recovered;
         return result("symmetric_split_basis", n, ok, "subalgebra + complement is a basis of sp(n+1)",
                       ok ? "basis" : "rank deficient", split_ref);
       }},
      {"killing_signature_complement", "the invariant form on R^{2n,2n} has signature (2n,2n)",
       [&] {
         const Signature want{2 * n, 2 * n, 0};
         const Signature got = ctx.split().complement_signature;
         return result("killing_signature_complement", n, got == want, want.to_string(), got.to_string(),
                       "the invariant form on R^{2n,2n} has signature (2n,2n)");
       }},
      {"standard_invariant_forms", "R^{2n} preserves a skew form and no nondegenerate symmetric one",
       [&] {
         const auto rep = standard_representation(ctx.sp());
         const auto sym = invariant_bilinear_forms(rep, FormSymmetry::symmetric);
         const auto skew = invariant_bilinear_forms(rep, FormSymmetry::skew);
         bool ok = sym.empty() && skew.size() == 1;
         if (ok) ok = SpanBasis(std::vector<Matrix>{skew.front(), symplectic_j(n)}).rank() == 1;
         return result("standard_invariant_forms", n, ok, "symmetric 0, skew 1 (spanned by J~)",
                       "symmetric " + std::to_string(sym.size()) + ", skew " + std::to_string(skew.size()),
                       "R^{2n} preserves a skew form and no nondegenerate symmetric one");
       }},
      {"double_standard_invariant_form", "the invariant form on R^{2n} + R^{2n} has signature (2n,2n)",
       [&] {
         const auto std_rep = standard_representation(ctx.sp());
         const auto forms = invariant_bilinear_forms(direct_sum(std_rep, std_rep), FormSymmetry::symmetric);
         const Signature want{2 * n, 2 * n, 0};
         const bool one = forms.size() == 1;
         const Signature got = one ? signature(forms.front()) : Signature{};
         return result("double_standard_invariant_form", n, one && got == want, "1 form, signature " + want.to_string(),
                       std::to_string(forms.size()) + " form(s)" + (one ? ", signature " + got.to_string() : ""),
                       "the invariant form on R^{2n} + R^{2n} has signature (2n,2n)");
       }},
      {"wedge2_isomorphism", "wedge^2 of R^{2n,2n} is isomorphic to so(2n,2n)",
       [&] {
         const std::size_t d = 4 * n;
         const auto images = wedge2_to_so(d, split_orthogonal_j(2 * n));
         std::vector<Matrix> mats;
         bool inside = true;
         for (const auto& w : images) {
           inside = inside && ctx.so().contains(w.image);
           mats.push_back(w.image);
         }
         const std::size_t r = SpanBasis(mats).rank();
         const bool ok = inside && r == binomial(d, 2) && r == ctx.so().dim();
         return result("wedge2_isomorphism", n, ok, "bijection onto so(2n,2n), rank " + std::to_string(binomial(d, 2)),
                       std::string(inside ? "images in so(2n,2n)" : "image outside so(2n,2n)") + ", rank " +
                           std::to_string(r),
                       "wedge^2 of R^{2n,2n} is isomorphic to so(2n,2n)");
       }},
      {"minimal_orthogonal_representation", "minimal orthogonal sp(n)-module has dimension 4n",
       [&] {
         const std::string ref = "minimal orthogonal sp(n)-module has dimension 4n";
         const std::string want = "m = " + std::to_string(4 * n);
         if (n < 3) return skipped("minimal_orthogonal_representation", n, want, ref);
         const auto rep = minimal_orthogonal_audit(n);
         json padded = json::array();
         for (const auto& p : rep.padded)
           padded.push_back({{"trivial_count", p.trivial_count},
                             {"symmetric_forms", p.symmetric_forms},
                             {"common_radical", p.common_radical}});
         json dims = json::array();
         for (const auto& v : rep.fundamental_dims) dims.push_back({{"j", v.j}, {"dim", v.dimension}});
         return result("minimal_orthogonal_representation", n, rep.pass() && rep.minimal_dimension == 4 * n, want,
                       "m = " + std::to_string(rep.minimal_dimension), ref,
                       json{{"fundamental_dims", dims},
                            {"standard_symmetric_forms", rep.standard_symmetric_forms},
                            {"standard_skew_forms", rep.standard_skew_forms},
                            {"padded", padded},
                            {"double_standard_signature", rep.double_standard_signature.to_string()}});
       }},
  });
}

void suite_schur(Context& ctx, std::vector<CheckResult>& out) {
  const std::size_t n = ctx.n;
  const std::string ref = "a_0 <,>_0 + a_1 <,>_1 + a_n <,>_n is the Killing form of sp(n+1)";
  std::optional<SchurConstants> sc;
  auto get = [&]() -> const SchurConstants& {
    if (!sc) sc = schur_constants(n);
    return *sc;
  };
  run_checks(out, n, {
      {"schur_cross_terms", ref,
       [&] { return certificate_check("schur_cross_terms", n, get().cross_terms_zero, ref); }},
      {"schur_a_n", ref,
       [&] {
         const auto& s = get();
         const Rational want(static_cast<std::int64_t>(2 * n + 4), static_cast<std::int64_t>(2 * n + 2));
         const bool ok = s.proportionality.ok && s.a_n == want;
         return result("schur_a_n", n, ok, want.to_fraction_string(),
                       s.proportionality.ok ? s.a_n.to_fraction_string() : "not proportional", ref,
                       ok ? json(nullptr) : counterexample_json(s.proportionality));
       }},
      {"schur_a_1", ref,
       [&] {
         const auto& s = get();
         const Rational want(static_cast<std::int64_t>(2 * n + 4), 4);
         const bool ok = s.proportionality.ok && s.a_1 == want;
         return result("schur_a_1", n, ok, want.to_fraction_string(),
                       s.proportionality.ok ? s.a_1.to_fraction_string() : "not proportional", ref,
                       ok ? json(nullptr) : counterexample_json(s.proportionality));
       }},
      {"schur_a_0", ref,
       [&] {
         const auto& s = get();
         const bool ok = s.proportionality.ok && !s.a_0.is_zero();
         return result("schur_a_0", n, ok, "single nonzero exact scalar",
                       s.proportionality.ok ? s.a_0.to_fraction_string() : "not proportional", ref,
                       ok ? json(nullptr) : counterexample_json(s.proportionality));
       }},
  });
}

void suite_dims(Context& ctx, std::vector<CheckResult>& out) {
  const std::size_t n = ctx.n;
  run_checks(out, n, {
      {"lemma_4n", "dim of the j-th fundamental module exceeds 4n for n >= 3, 2 <= j <= n",
       [&] {
         const std::string ref = "dim of the j-th fundamental module exceeds 4n for n >= 3, 2 <= j <= n";
         const std::string want = "all dims > " + std::to_string(4 * n);
         if (n < 3) return skipped("lemma_4n", n, want, ref);
         const auto verdicts = lemma_4n_audit(n);
         bool ok = true;
         std::string actual;
         json w = json::array();
         for (const auto& v : verdicts) {
           ok = ok && v.pass;
           actual += (actual.empty() ? "" : ", ") + ("j=" + std::to_string(v.j) + ":" + std::to_string(v.dimension));
           w.push_back({{"j", v.j}, {"dim", v.dimension}, {"pass", v.pass}});
         }
         return result("lemma_4n", n, ok, want, actual, ref, w);
       }},
      {"weyl_vs_binomial", "dim of the j-th fundamental module is C(2n,j) - C(2n,j-2)",
       [&] {
         bool ok = true;
         std::string actual;
         for (std::size_t j = 1; j <= n; ++j) {
           const auto a = weyl_dim(n, fundamental_weight(n, j));
           const auto b = fundamental_dim_binomial(n, j);
           ok = ok && a == b;
           actual += (j > 1 ? ", " : "") + std::to_string(a);
         }
         return result("weyl_vs_binomial", n, ok, "Weyl formula = binomial formula for j = 1.." + std::to_string(n),
                       actual, "dim of the j-th fundamental module is C(2n,j) - C(2n,j-2)");
       }},
  });
  const auto ta = theorem_a_dimension_audit(n);
  out.insert(out.end(), ta.begin(), ta.end());
}

std::string n_label(std::size_t a, std::size_t b) {
  return a == b ? std::to_string(a) : std::to_string(a) + ".." + std::to_string(b);
}

} // namespace

std::vector<CheckResult> theorem_a_dimension_audit(std::size_t n) {
  const std::string ref_bounds = "3 + n(2n+1) < dim M <= (n+1)(2n+3)";
  const std::string ref_sum = "dim M >= dim G + m(g)";
  const std::size_t dim_sp = n * (2 * n + 1);
  const std::size_t dim_g = dim_sp + 3;
  const std::size_t top = (n + 1) * (2 * n + 3);
  if (n < 3)
    return {skipped("theorem_a_dim_g", n, std::to_string(dim_g), ref_sum),
            skipped("theorem_a_dim_sum", n, std::to_string(top), ref_sum),
            skipped("theorem_a_dim_sp_succ", n, std::to_string(top), ref_bounds),
            skipped("theorem_a_strict_lower", n, std::to_string(3 + dim_sp) + " < " + std::to_string(top), ref_bounds)};

  std::vector<CheckResult> out;
  run_checks(out, n, {
      {"theorem_a_dim_g", ref_sum,
       [&] {
         const std::size_t got = sp_algebra(n).dim() + sp_algebra(1).dim();
         return result("theorem_a_dim_g", n, got == dim_g, std::to_string(dim_g), std::to_string(got), ref_sum);
       }},
      {"theorem_a_dim_sum", ref_sum,
       [&] {
         const auto rep = minimal_orthogonal_audit(n);
         const std::size_t got = dim_g + rep.minimal_dimension;
         return result("theorem_a_dim_sum", n, rep.pass() && got == top, std::to_string(top),
                       std::to_string(dim_g) + " + " + std::to_string(rep.minimal_dimension) + " = " + std::to_string(got),
                       ref_sum);
       }},
      {"theorem_a_dim_sp_succ", ref_bounds,
       [&] {
         const std::size_t got = sp_algebra(n + 1).dim();
         return result("theorem_a_dim_sp_succ", n, got == top, std::to_string(top), std::to_string(got), ref_bounds);
       }},
      {"theorem_a_strict_lower", ref_bounds,
       [&] {
         const std::size_t lower = 3 + dim_sp;
         return result("theorem_a_strict_lower", n, lower < top, std::to_string(lower) + " < " + std::to_string(top),
                       std::to_string(lower) + (lower < top ? " < " : " >= ") + std::to_string(top), ref_bounds);
       }},
  });
  return out;
}

SuiteReport run_suite(std::size_t n_first, std::size_t n_last, const std::string& suite) {
  if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  if (n_first < 1) throw UsageError("n must be at least 1");
  if (n_last < n_first) throw UsageError("empty rank range " + n_label(n_first, n_last));

  SuiteReport report;
  report.suite = suite;
  report.n_first = n_first;
  report.n_last = n_last;
  using SuiteFn = void (*)(Context&, std::vector<CheckResult>&);
  const std::vector<std::pair<std::string, SuiteFn>> order{
      {"algebras", suite_algebras}, {"embeddings", suite_embeddings}, {"centralizers", suite_centralizers},
      {"decomposition", suite_decomposition}, {"forms", suite_forms}, {"schur", suite_schur}, {"dims", suite_dims}};
  for (std::size_t n = n_first; n <= n_last; ++n) {
    Context ctx(n);
    for (const auto& [name, fn] : order)
      if (suite == "all" || suite == name) fn(ctx, report.checks);
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.name, a.n) < std::tie(b.name, b.n);
  });
  for (const auto& c : report.checks) {
    switch (c.status) {
    case Status::pass: ++report.summary.pass; break;
    case Status::fail: ++report.summary.fail; break;
    case Status::skipped: ++report.summary.skipped; break;
    }
  }
  return report;
}

std::string SuiteReport::to_json() const {
  json doc;
  doc["suite"] = suite;
  if (n_first == n_last)
    doc["n"] = n_first;
  else
    doc["n"] = n_label(n_first, n_last);
  doc["tool_version"] = tool_version;
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"n", c.n},
                   {"status", to_string(c.status)},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"paper_ref", c.paper_ref},
                   {"witness", c.witness}});
  doc["checks"] = std::move(arr);
  doc["summary"] = {{"pass", summary.pass}, {"fail", summary.fail}, {"skipped", summary.skipped}};
  return doc.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "liecert " << tool_version << "  suite=" << suite << "  n=" << n_label(n_first, n_last) << "\n";
  for (const auto& c : checks) {
    os << (c.status == Status::pass ? "PASS " : c.status == Status::fail ? "FAIL " : "SKIP ") << c.name << " [n=" << c.n
       << "]  expected: " << c.expected << "  actual: " << c.actual << "\n";
  }
  os << "summary: " << summary.pass << " pass, " << summary.fail << " fail, " << summary.skipped << " skipped\n";
  return os.str();
}

std::string dims_table(std::size_t n) {
  if (n < 1) throw UsageError("n must be at least 1");
  std::ostringstream os;
  os << "fundamental modules of sp(" << n << "), bound 4n = " << 4 * n << "\n";
  os << "j\tC(2n,j)\tC(2n,j-2)\tdim\tweyl\t> 4n\n";
  for (std::size_t j = 1; j <= n; ++j) {
    const auto dim = fundamental_dim_binomial(n, j);
    os << j << '\t' << binomial(2 * n, j) << '\t' << (j >= 2 ? binomial(2 * n, j - 2) : 0) << '\t' << dim << '\t'
       << weyl_dim(n, fundamental_weight(n, j)) << '\t' << (dim > 4 * n ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string decomposition_report(const std::string& target, const std::string& under, std::size_t n, bool as_json) {
  if (n < 1) throw UsageError("n must be at least 1");
  if (target != "so-split" && target != "sp-succ") throw UsageError("unknown target '" + target + "'");
  if (under != "sp" && under != "sp-sp1") throw UsageError("unknown subalgebra '" + under + "'");

  Embedding emb = target == "so-split" ? (under == "sp" ? embed_sp_in_so(n) : embed_sp_sp1_in_so(n))
                                       : embed_sp_sp1_in_sp_succ(n);
  RootDatum rd = under == "sp" ? sp_root_datum(n)
                               : direct_sum_root_datum(sp_root_datum(n), 2 * n, sp_root_datum(1), 2);
  if (target == "sp-succ" && under == "sp") {
    // Keep only the sp(n) factor of the sp(n)+sp(1) inclusion.
    LinearAlgebraMap restricted{sp_algebra(n), emb.target(), emb.factor_images(0)};
    Embedding only{restricted, certify_homomorphism(restricted), emb.target_form, {restricted.source.dim()}};
    emb = std::move(only);
  }
  if (!emb.certificate.ok) throw std::runtime_error("embedding failed certification");
  const Representation rep = restriction_representation(emb.target(), emb, ActionKind::adjoint);
  const auto summands = decompose(rep, rd);

  if (as_json) {
    json doc{{"target", target},        {"under", under},
             {"n", n},                  {"degree", rep.degree()},
             {"tool_version", kToolVersion}, {"summands", summands_json(summands)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << emb.target().name() << " under " << emb.source().name() << " (adjoint, degree " << rep.degree() << ")\n";
  std::uint64_t total = 0;
  for (const auto& s : summands) {
    os << "highest weight " << weight_string(s.highest_weight) << "  multiplicity " << s.multiplicity << "  dim "
       << s.dim_each << "\n";
    total += s.multiplicity * s.dim_each;
  }
  os << "total " << total << "\n";
  return os.str();
}

} // namespace liecert::audit
