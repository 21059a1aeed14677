// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/app/pipeline.hpp"

#include "tweetkit/error.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tweetkit::app {

namespace {

features::FeatureVector vectorize(const FittedPipeline& pipeline,
                                  const std::vector<textprep::Token>& tokens) {
    features::FeatureVector fv = features::vectorize_counts(tokens, pipeline.vocab);
    if (pipeline.config.weighting == Weighting::tfidf) {
        fv = features::apply_tfidf(fv, *pipeline.idf);
    }
    return fv;
}

} // namespace

FittedPipeline fit_pipeline(const corpus::LabeledDataset& train, const PipelineConfig& config) {
    if (train.empty()) throw UsageError("fit_pipeline: empty training set");

    FittedPipeline out;
    out.config = config;

    // classes: schema order, restricted to labels that actually occur
    std::unordered_set<std::string> present;
    for (const auto& doc : train.documents) present.insert(doc.label);
    for (const auto& label : train.schema.labels) {
        if (present.count(label) > 0) out.classes.push_back(label);
    }
    std::unordered_map<std::string, std::int32_t> class_index;
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
        class_index.emplace(out.classes[c], static_cast<std::int32_t>(c));
    }

    const textprep::Preprocessor prep(config.prep);
    std::vector<std::vector<textprep::Token>> tokens;
    tokens.reserve(train.size());
    std::vector<std::int32_t> y;
    y.reserve(train.size());
    for (const auto& doc : train.documents) {
        tokens.push_back(prep(doc.text));
        y.push_back(class_index.at(doc.label));
    }

    out.vocab = features::build_vocabulary(tokens, config.ngram, config.min_count);

    features::FeatureMatrix X;
    X.n_cols = out.vocab.size();
    X.rows.reserve(tokens.size());
    for (const auto& toks : tokens) {
        X.rows.push_back(features::vectorize_counts(toks, out.vocab));
    }
    if (config.weighting == Weighting::tfidf) {
        out.idf = features::fit_idf(X);
        for (auto& row : X.rows) row = features::apply_tfidf(row, *out.idf);
    }

    if (config.model == ModelKind::mnb) {
        out.mnb = models::train_mnb(X, y, out.classes, config.mnb_alpha);
    } else {
        out.logreg = models::train_logreg(X, y, out.classes, config.logreg);
    }
    return out;
}

Prediction predict_one(const FittedPipeline& pipeline, const std::string& text) {
    const textprep::Preprocessor prep(pipeline.config.prep);
    const features::FeatureVector x = vectorize(pipeline, prep(text));

    Prediction pred;
    if (pipeline.uses_logreg()) {
        const auto p = models::predict_logreg(*pipeline.logreg, x);
        pred.label = pipeline.classes[static_cast<std::size_t>(p.label)];
        pred.class_probabilities = p.probabilities;
    } else {
        const auto p = models::predict_mnb(*pipeline.mnb, x);
        pred.label = pipeline.classes[static_cast<std::size_t>(p.label)];
        pred.class_probabilities = models::softmax(p.log_scores); // normalized posterior
    }
    pred.confidence = *std::max_element(pred.class_probabilities.begin(),
                                        pred.class_probabilities.end());
    return pred;
}

eval::EvalReport evaluate_pipeline(const FittedPipeline& pipeline,
                                   const corpus::LabeledDataset& holdout) {
    for (const auto& doc : holdout.documents) {
        if (std::find(pipeline.classes.begin(), pipeline.classes.end(), doc.label) ==
            pipeline.classes.end()) {
            throw DataError("evaluate_pipeline: label \"" + doc.label +
                            "\" was never seen in training");
        }
    }

    const textprep::Preprocessor prep(pipeline.config.prep);
    std::vector<std::string> y_true, y_pred;
    y_true.reserve(holdout.size());
    y_pred.reserve(holdout.size());
    for (const auto& doc : holdout.documents) {
        const features::FeatureVector x = vectorize(pipeline, prep(doc.text));
        std::int32_t label;
        if (pipeline.uses_logreg()) {
            label = models::predict_logreg(*pipeline.logreg, x).label;
        } else {
            label = models::predict_mnb(*pipeline.mnb, x).label;
        }
        y_true.push_back(doc.label);
        y_pred.push_back(pipeline.classes[static_cast<std::size_t>(label)]);
    }
    return eval::compute_report(y_true, y_pred, pipeline.classes);
}

eval::PipelineRunner pipeline_runner() {
    return [](const corpus::LabeledDataset& train, const corpus::LabeledDataset& test,
              const PipelineConfig& config) {
        return evaluate_pipeline(fit_pipeline(train, config), test);
    };
}

} // namespace tweetkit::app
