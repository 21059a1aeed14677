// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/eval/metrics.hpp"

#include "tweetkit/error.hpp"

#include <unordered_map>

namespace tweetkit::eval {

const ClassMetrics& EvalReport::for_class(const std::string& label) const {
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c] == label) return per_class[c];
    }
    throw UsageError("report has no class \"" + label + "\"");
}

EvalReport compute_report(const std::vector<std::string>& y_true,
                          const std::vector<std::string>& y_pred,
                          const std::vector<std::string>& classes) {
    if (y_true.size() != y_pred.size()) {
        throw UsageError("compute_report: y_true and y_pred lengths differ");
    }
    if (y_true.empty()) throw UsageError("compute_report: no predictions to score");

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t c = 0; c < classes.size(); ++c) index.emplace(classes[c], c);
    const std::size_t K = classes.size();

    EvalReport rep;
    rep.classes = classes;
    rep.confusion.classes = classes;
    rep.confusion.counts.assign(K * K, 0);
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        auto t = index.find(y_true[i]);
        auto p = index.find(y_pred[i]);
        if (t == index.end()) throw DataError("compute_report: unknown label \"" + y_true[i] + "\"");
        if (p == index.end()) throw DataError("compute_report: unknown label \"" + y_pred[i] + "\"");
        rep.confusion.counts[t->second * K + p->second] += 1;
    }

    std::uint64_t trace = 0;
    rep.per_class.resize(K);
    for (std::size_t c = 0; c < K; ++c) {
        std::uint64_t row = 0, col = 0;
        for (std::size_t j = 0; j < K; ++j) {
            row += rep.confusion.counts[c * K + j];
            col += rep.confusion.counts[j * K + c];
        }
        const std::uint64_t diag = rep.confusion.counts[c * K + c];
        trace += diag;

        ClassMetrics& m = rep.per_class[c];
        m.support = row;
        if (col > 0) {
            m.precision = static_cast<double>(diag) / static_cast<double>(col);
        } else {
            rep.zero_division_flags.emplace_back(classes[c], "precision");
        }
        if (row > 0) {
            m.recall = static_cast<double>(diag) / static_cast<double>(row);
        } else {
            rep.zero_division_flags.emplace_back(classes[c], "recall");
        }
        if (m.precision + m.recall > 0.0) {
            m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
        } else {
            rep.zero_division_flags.emplace_back(classes[c], "f1");
        }
    }

    const double n = static_cast<double>(y_true.size());
    rep.accuracy = static_cast<double>(trace) / n;

    for (const ClassMetrics& m : rep.per_class) {
        rep.macro.precision += m.precision / static_cast<double>(K);
        rep.macro.recall += m.recall / static_cast<double>(K);
        rep.macro.f1 += m.f1 / static_cast<double>(K);
        rep.macro.support += m.support;
        const double w = static_cast<double>(m.support) / n;
        rep.weighted.precision += w * m.precision;
        rep.weighted.recall += w * m.recall;
        rep.weighted.f1 += w * m.f1;
        rep.weighted.support += m.support;
    }
    return rep;
}

double score_of(const EvalReport& report, Scoring scoring) {
    switch (scoring) {
    case Scoring::accuracy: return report.accuracy;
    case Scoring::macro_f1: return report.macro.f1;
    case Scoring::weighted_f1: return report.weighted.f1;
    }
    return report.accuracy;
}

const char* scoring_name(Scoring scoring) {
    switch (scoring) {
    case Scoring::accuracy: return "accuracy";
    case Scoring::macro_f1: return "macro_f1";
    case Scoring::weighted_f1: return "weighted_f1";
    }
    return "accuracy";
}

} // namespace tweetkit::eval
