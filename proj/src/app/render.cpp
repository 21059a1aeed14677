// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/app/render.hpp"

#include "tweetkit/kernels/vecops.hpp"
#include "tweetkit/textprep/stopwords.hpp"

#include <cstdio>
#include <sstream>

namespace tweetkit::app {

using nlohmann::json;

namespace {

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void row(std::ostringstream& os, const std::string& name, const std::string& p,
         const std::string& r, const std::string& f1, const std::string& support,
         std::size_t name_width) {
    os << name;
    for (std::size_t i = name.size(); i < name_width; ++i) os << ' ';
    auto cell = [&](const std::string& s) {
        os << s;
        for (std::size_t i = s.size(); i < 11; ++i) os << ' ';
    };
    cell(p);
    cell(r);
    cell(f1);
    os << support << "\n";
}

} // namespace

std::string render_report(const eval::EvalReport& report) {
    std::size_t width = 16;
    for (const auto& c : report.classes) width = std::max(width, c.size() + 2);

    std::ostringstream os;
    row(os, "Class", "Precision", "Recall", "F1", "Support", width);
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
        const auto& m = report.per_class[c];
        row(os, report.classes[c], fixed3(m.precision), fixed3(m.recall), fixed3(m.f1),
            std::to_string(m.support), width);
    }
    row(os, "Weighted avg", fixed3(report.weighted.precision), fixed3(report.weighted.recall),
        fixed3(report.weighted.f1), std::to_string(report.weighted.support), width);
    row(os, "Macro avg", fixed3(report.macro.precision), fixed3(report.macro.recall),
        fixed3(report.macro.f1), std::to_string(report.macro.support), width);
    os << "Accuracy " << fixed3(report.accuracy) << "\n";
    if (!report.zero_division_flags.empty()) {
        os << "zero-division: ";
        for (std::size_t i = 0; i < report.zero_division_flags.size(); ++i) {
            if (i > 0) os << ", ";
            os << report.zero_division_flags[i].first << "/"
               << report.zero_division_flags[i].second;
        }
        os << "\n";
    }
    return os.str();
}

std::string describe(const PipelineConfig& c) {
    std::ostringstream os;
    os << (c.model == ModelKind::logreg ? "logreg" : "mnb");
    if (c.model == ModelKind::logreg) {
        switch (c.logreg.penalty) {
        case models::Penalty::none: os << " penalty=none"; break;
        case models::Penalty::l1: os << " penalty=l1 C=" << c.logreg.C; break;
        case models::Penalty::l2: os << " penalty=l2 C=" << c.logreg.C; break;
        }
        os << " cw="
           << (c.logreg.class_weight_mode == models::ClassWeightMode::balanced ? "balanced"
               : c.logreg.class_weight_mode == models::ClassWeightMode::custom ? "custom"
                                                                               : "none");
    } else {
        os << " alpha=" << c.mnb_alpha;
    }
    os << " ngram=(" << c.ngram.lo << "," << c.ngram.hi << ")"
       << " min_count=" << c.min_count
       << " weighting=" << (c.weighting == Weighting::tfidf ? "tfidf" : "counts")
       << " prep=[" << (c.prep.normalize ? "normalize " : "")
       << (c.prep.lowercase ? "lowercase " : "")
       << (c.prep.remove_stopwords ? "stopwords " : "")
       << (c.prep.stem ? "stem" : "") << "]";
    return os.str();
}

json report_to_json(const eval::EvalReport& report) {
    json per_class = json::object();
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
        const auto& m = report.per_class[c];
        per_class[report.classes[c]] = {{"precision", m.precision},
                                        {"recall", m.recall},
                                        {"f1", m.f1},
                                        {"support", m.support}};
    }
    json flags = json::array();
    for (const auto& [label, metric] : report.zero_division_flags) {
        flags.push_back({{"label", label}, {"metric", metric}});
    }
    return json{{"classes", report.classes},
                {"per_class", std::move(per_class)},
                {"macro",
                 {{"precision", report.macro.precision},
                  {"recall", report.macro.recall},
                  {"f1", report.macro.f1}}},
                {"weighted",
                 {{"precision", report.weighted.precision},
                  {"recall", report.weighted.recall},
                  {"f1", report.weighted.f1}}},
                {"accuracy", report.accuracy},
                {"zero_division_flags", std::move(flags)}};
}

json config_to_summary_json(const PipelineConfig& c) {
    return json{{"model", c.model == ModelKind::logreg ? "logreg" : "mnb"},
                {"penalty", c.logreg.penalty == models::Penalty::none   ? "none"
                            : c.logreg.penalty == models::Penalty::l1 ? "l1"
                                                                       : "l2"},
                {"C", c.logreg.C},
                {"class_weights",
                 c.logreg.class_weight_mode == models::ClassWeightMode::balanced ? "balanced"
                 : c.logreg.class_weight_mode == models::ClassWeightMode::custom ? "custom"
                                                                                 : "none"},
                {"mnb_alpha", c.mnb_alpha},
                {"ngram", {c.ngram.lo, c.ngram.hi}},
                {"min_count", c.min_count},
                {"weighting", c.weighting == Weighting::tfidf ? "tfidf" : "counts"},
                {"normalize", c.prep.normalize},
                {"lowercase", c.prep.lowercase},
                {"remove_stopwords", c.prep.remove_stopwords},
                {"stem", c.prep.stem}};
}

json reference_to_json(const ReferenceScore& ref) {
    return json{{"key", ref.key},           {"description", ref.description},
                {"source", ref.source},     {"value", ref.value},
                {"tolerance", ref.tolerance}, {"computed", ref.computed}};
}

json versions_json() {
    return json{{"tweetkit", kVersion},
                {"stopwords", textprep::stopword_list_version()},
                {"simd", kernels::backend_name()}};
}

} // namespace tweetkit::app
