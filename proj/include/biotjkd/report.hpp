#ifndef BIOTJKD_REPORT_HPP
#define BIOTJKD_REPORT_HPP

#include "biotjkd/material.hpp"
#include "biotjkd/model.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace biotjkd {

struct RelErrPoint {
    double omega;
    double rel_err;
};

// rel_err(s = -i omega) = |D^J(s) - D_est(s)| / |D^J(s)| with the model
// rounded to 64-bit before evaluation; the reference is evaluated at high
// precision and then compared in hardware floats.
std::vector<RelErrPoint> rel_err_profile(const MaterialParams& m, const PoleResidueModel& model,
                                         const std::vector<double>& eval_omegas);

// Default dense band: 1000 log-spaced points across [lo, hi].
std::vector<double> dense_band(double lo, double hi, std::size_t count = 1000);

// Fills max/median relative error fields of the report.
void attach_rel_err(FitReport& report, const MaterialParams& m, const PoleResidueModel& model);

// JSON model file, schema_version 1. Full-precision decimal strings are
// stored alongside the doubles when `full_precision` is set.
std::string export_model(const PoleResidueModel& model, const FitReport& report,
                         bool full_precision = true);
void export_model_file(const PoleResidueModel& model, const FitReport& report,
                       const std::string& path, bool full_precision = true);

struct ImportedModel {
    PoleResidueModel model;
    FitReport report;
};

ImportedModel import_model(const std::string& json_text);
ImportedModel import_model_file(const std::string& path);

// Condition-number table for one material: rows A, B, S1, S2 against
// (M=8, equal), (M=8, log), (M=14, equal), (M=14, log). CSV layout.
void export_condition_table(std::ostream& out, const MaterialParams& m, unsigned digits,
                            double lo, double hi);

} // namespace biotjkd

#endif
