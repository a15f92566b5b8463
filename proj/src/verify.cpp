#include "manp/verify.hpp"

#include <algorithm>
#include <set>

#include "manp/exact_matrix.hpp"
#include "manp/jordan.hpp"
#include "manp/reduction.hpp"

namespace manp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "equal";
    case Verdict::subset:
      return "subset";
    case Verdict::mismatch:
      return "MISMATCH";
  }
  return "?";
}

std::string to_string(VerifyMode m) { return m == VerifyMode::exhaustive ? "exhaustive" : "sample"; }

namespace {

template <class F>
void observe(const Matrix<F>& a, const Partition& mu, bool cross_check, std::set<Partition, CanonicalOrder>& seen) {
  Partition shape = nilpotent_shape(a);
  if (cross_check) {
    const Partition via_reduction = shape_of_reduced(reduce(a, mu));
    if (via_reduction != shape)
      throw InternalInconsistency("verify: rank sequence gives (" + shape.to_string() + ") but reduction gives (" +
                                  via_reduction.to_string() + ")");
  }
  seen.insert(std::move(shape));
}

template <class F>
void collect(const Partition& mu, const F& field, const VerifyOptions& options, VerifyReport& report,
             std::set<Partition, CanonicalOrder>& seen) {
  if (options.mode == VerifyMode::exhaustive) {
    const CandidateEnumerator<F> candidates(mu, field, options.budget);
    report.candidates = candidates.size();
    candidates.for_each([&](const Matrix<F>& a) {
      if (!is_nilpotent(a)) return;
      ++report.nilpotent;
      observe(a, mu, options.cross_check, seen);
    });
    return;
  }
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const std::uint64_t key = mix_seed(options.seed, i);
    const Matrix<F> a = options.nilpotent_sampler ? sample_nilpotent_candidate(mu, field, key)
                                                  : sample_candidate(mu, field, key);
    ++report.candidates;
    if (!is_nilpotent(a)) continue;
    ++report.nilpotent;
    observe(a, mu, options.cross_check, seen);
  }
}

}  // namespace

VerifyReport cmd_verify(const Partition& mu, const FieldSpec& field, const VerifyOptions& options) {
  if (!field.is_finite()) throw PreconditionViolated("verify needs a finite field");
  VerifyReport report{mu, field, options, enumerate_shapes(mu), {}, 0, 0, Verdict::equal, {}};
  std::set<Partition, CanonicalOrder> seen;
  if (field.is_gf2())
    collect(mu, Gf2{}, options, report, seen);
  else
    collect(mu, PrimeField(field.modulus), options, report, seen);
  report.observed.assign(seen.begin(), seen.end());

  const std::set<Partition, CanonicalOrder> predicted(report.predicted.begin(), report.predicted.end());
  std::vector<Partition> outliers, missing;
  for (const auto& p : report.observed)
    if (!predicted.count(p)) outliers.push_back(p);
  for (const auto& p : report.predicted)
    if (!seen.count(p)) missing.push_back(p);

  auto list = [](const std::vector<Partition>& ps) {
    std::string out;
    for (const auto& p : ps) out += (out.empty() ? "(" : " (") + p.to_string() + ")";
    return out;
  };
  if (!outliers.empty()) {
    report.verdict = Verdict::mismatch;
    report.details = "observed but not predicted: " + list(outliers);
  } else if (missing.empty()) {
    report.verdict = Verdict::equal;
  } else if (options.mode == VerifyMode::exhaustive) {
    report.verdict = Verdict::mismatch;
    report.details = "predicted but never observed: " + list(missing);
  } else {
    report.verdict = Verdict::subset;
    report.details = "not sampled: " + list(missing);
  }
  return report;
}

int RoundtripResult::exit_code() const noexcept {
  if (ok) return 0;
  return stage == "compatible" ? 1 : 3;
}

RoundtripResult cmd_roundtrip(const Partition& mu, const Partition& nu, const FieldSpec& field) {
  RoundtripResult result;
  result.stage = "compatible";
  result.certificate = compatible(mu, nu);
  if (!result.certificate) {
    result.message = "(" + nu.to_string() + ") is not attainable when sh B = (" + mu.to_string() + ")";
    return result;
  }
  return with_field(field, [&](auto f) {
    try {
      result.stage = "witness";
      const auto w = witness_from_certificate(mu, *result.certificate, f);
      result.stage = "reduce";
      const auto reduced = reduce(w.a, mu, ReduceOptions{true});
      result.stage = "shape";
      const Partition shape = shape_of_reduced(reduced);
      if (shape != nu) {
        result.message = "shape_of_reduced gives (" + shape.to_string() + ")";
        return result;
      }
    } catch (const Error& e) {
      result.message = e.what();
      return result;
    }
    result.ok = true;
    result.stage = "done";
    return result;
  });
}

}  // namespace manp
