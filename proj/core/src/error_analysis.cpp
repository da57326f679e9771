#include "trigspline/error_analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trigspline/phantom.hpp"
#include "trigspline/text_io.hpp"

namespace trigspline {

namespace {

ArcError sup_error_on(const TrigSpline& spline, const SourceFunction& f, int original_count,
                      int dense, double upper) {
  if (dense < 101)
    throw std::invalid_argument("dense grid needs at least 101 points, got " +
                                std::to_string(dense));
  if (original_count < 2 || original_count > spline.grid().node_count())
    throw std::invalid_argument("original count out of range for this spline");
  const double arc_end = spline.grid().node(original_count - 1);
  const double rescale = kTwoPi / arc_end;
  double max_dev = 0.0;
  double max_ref = 0.0;
  for (int i = 0; i < dense; ++i) {
    const double u = upper * (static_cast<double>(i) / (dense - 1));
    const double ref = f.value(u * rescale);
    const double dev = std::abs(spline.value(u) - ref);
    max_dev = std::max(max_dev, dev);
    max_ref = std::max(max_ref, std::abs(ref));
  }
  if (max_ref == 0.0) return {max_dev, true};
  return {max_dev / max_ref, false};
}

}  // namespace

ArcError relative_error(const TrigSpline& spline, const SourceFunction& f, int original_count,
                        int dense) {
  return sup_error_on(spline, f, original_count, dense,
                      spline.grid().node(original_count - 1));
}

ArcError relative_error_full(const TrigSpline& spline, const SourceFunction& f,
                             int original_count, int dense) {
  return sup_error_on(spline, f, original_count, dense, kTwoPi);
}

std::vector<ErrorReport> run_table(const SourceFunction& f, int original_count,
                                   std::span<const int> phantom_pair_counts, int order,
                                   int dense) {
  if (original_count % 2 == 0)
    throw std::invalid_argument("table runs need an odd original sample count");
  const auto data = sample_source(f, original_count);

  const auto baseline_samples = place_on_circle(data, 0);
  const TrigSpline baseline = build_spline(baseline_samples, order);
  const ArcError base_arc = relative_error(baseline, f, original_count, dense);
  const ArcError base_full = relative_error_full(baseline, f, original_count, dense);

  std::vector<ErrorReport> reports;
  for (int k : phantom_pair_counts) {
    if (k < 1) throw std::invalid_argument("phantom pair counts must be >= 1");
    ErrorReport rep;
    rep.function_id = f.id;
    rep.original_count = original_count;
    rep.phantom_pairs = k;
    rep.order = order;
    rep.baseline_arc = base_arc.value;
    rep.baseline_full = base_full.value;
    rep.baseline_absolute = base_arc.absolute_fallback;
    for (int p = 0; p <= 2; ++p) {
      PhantomConfig cfg;
      cfg.pairs = k;
      cfg.match_order = p;
      cfg.source = DerivativeSource::divided_difference;
      const SampleSet filled = fill_phantom(place_on_circle(data, k), cfg, &f);
      const TrigSpline sp = build_spline(filled, order);
      const double e = relative_error(sp, f, original_count, dense).value;
      rep.variant_errors[static_cast<size_t>(p)] = e;
      rep.reduction_factors[static_cast<size_t>(p)] = base_arc.value / e;
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::string render_table_markdown(std::span<const ErrorReport> reports) {
  std::ostringstream out;
  if (!reports.empty())
    out << "Function: " << reports.front().function_id
        << ", spline order " << reports.front().order << "\n\n";
  out << "| N | baseline error | phantom nodes | factor (linear) | factor (1st derivative) "
         "| factor (2 derivatives) |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    out << "| " << r.original_count << " | " << g17(r.baseline_arc) << " | "
        << 2 * r.phantom_pairs << " | " << g17(r.reduction_factors[0]) << " | "
        << g17(r.reduction_factors[1]) << " | " << g17(r.reduction_factors[2]) << " |\n";
  }
  return out.str();
}

std::string render_table_csv(std::span<const ErrorReport> reports) {
  std::ostringstream out;
  out << "function,N,k,baseline_arc,baseline_full,error_p0,error_p1,error_p2,"
         "factor_p0,factor_p1,factor_p2\n";
  for (const auto& r : reports) {
    out << r.function_id << ',' << r.original_count << ',' << r.phantom_pairs << ','
        << g17(r.baseline_arc) << ',' << g17(r.baseline_full) << ','
        << g17(r.variant_errors[0]) << ',' << g17(r.variant_errors[1]) << ','
        << g17(r.variant_errors[2]) << ',' << g17(r.reduction_factors[0]) << ','
        << g17(r.reduction_factors[1]) << ',' << g17(r.reduction_factors[2]) << '\n';
  }
  return out.str();
}

std::string render_table_json(std::span<const ErrorReport> reports) {
  std::ostringstream out;
  out << "[\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out << "  {\"function\": \"" << r.function_id << "\", \"N\": " << r.original_count
        << ", \"k\": " << r.phantom_pairs << ", \"baseline\": " << g17(r.baseline_arc)
        << ", \"baseline_arc\": " << g17(r.baseline_arc)
        << ", \"baseline_full\": " << g17(r.baseline_full)
        << ", \"baseline_absolute\": " << (r.baseline_absolute ? "true" : "false")
        << ", \"variants\": {\"p0\": " << g17(r.variant_errors[0])
        << ", \"p1\": " << g17(r.variant_errors[1])
        << ", \"p2\": " << g17(r.variant_errors[2])
        << "}, \"factors\": {\"p0\": " << g17(r.reduction_factors[0])
        << ", \"p1\": " << g17(r.reduction_factors[1])
        << ", \"p2\": " << g17(r.reduction_factors[2]) << "}}";
    out << (i + 1 < reports.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return out.str();
}

Curve emit_curve(const TrigSpline& spline, const SourceFunction* f, int original_count,
                 int dense) {
  if (dense < 101)
    throw std::invalid_argument("dense grid needs at least 101 points, got " +
                                std::to_string(dense));
  Curve c;
  c.has_reference = f != nullptr;
  const double arc_end = spline.grid().node(original_count - 1);
  const double rescale = kTwoPi / arc_end;
  c.t.reserve(static_cast<size_t>(dense));
  c.spline.reserve(static_cast<size_t>(dense));
  for (int i = 0; i < dense; ++i) {
    const double u = kTwoPi * (static_cast<double>(i) / (dense - 1));
    const double s = spline.value(u);
    c.t.push_back(u);
    c.spline.push_back(s);
    if (f != nullptr) {
      const double ref = f->value(u * rescale);
      c.reference.push_back(ref);
      c.abs_error.push_back(std::abs(s - ref));
    }
  }
  return c;
}

std::string render_curve_csv(const Curve& curve) {
  std::ostringstream out;
  out << (curve.has_reference ? "t,spline,reference,abs_error\n" : "t,spline\n");
  for (size_t i = 0; i < curve.t.size(); ++i) {
    out << g17(curve.t[i]) << ',' << g17(curve.spline[i]);
    if (curve.has_reference)
      out << ',' << g17(curve.reference[i]) << ',' << g17(curve.abs_error[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace trigspline
