// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tweetkit::eval {

/// rows = true class, columns = predicted class, in `classes` order.
struct ConfusionMatrix {
    std::vector<std::string> classes;
    std::vector<std::uint64_t> counts; // K x K row-major

    std::uint64_t at(std::size_t true_c, std::size_t pred_c) const {
        return counts[true_c * classes.size() + pred_c];
    }
};

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t support = 0;
};

/// Per-class precision/recall/F1 plus unweighted (macro) and support-weighted
/// averages. Zero denominators score 0 and are listed in zero_division_flags
/// as (label, metric). weighted.recall always equals accuracy.
struct EvalReport {
    std::vector<std::string> classes;
    std::vector<ClassMetrics> per_class;
    ClassMetrics macro;
    ClassMetrics weighted;
    double accuracy = 0.0;
    ConfusionMatrix confusion;
    std::vector<std::pair<std::string, std::string>> zero_division_flags;

    const ClassMetrics& for_class(const std::string& label) const;
};

EvalReport compute_report(const std::vector<std::string>& y_true,
                          const std::vector<std::string>& y_pred,
                          const std::vector<std::string>& classes);

enum class Scoring { accuracy, macro_f1, weighted_f1 };

double score_of(const EvalReport& report, Scoring scoring);
const char* scoring_name(Scoring scoring);

} // namespace tweetkit::eval
