// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/app/manifest.hpp"

#include "tweetkit/error.hpp"

namespace tweetkit::app {

namespace {

PipelineConfig raw_mnb_baseline() {
    PipelineConfig c;
    c.prep = textprep::PrepConfig::raw();
    c.prep.lowercase = true; // "raw" still case-folds, as stock vectorizers do
    c.ngram = {1, 1};
    c.min_count = 1;
    c.weighting = Weighting::counts;
    c.model = ModelKind::mnb;
    c.mnb_alpha = 1.0;
    return c;
}

DatasetEntry climate_entry() {
    DatasetEntry e;
    e.name = "climate";
    e.source_url = "https://www.kaggle.com/datasets/edqian/twitter-climate-change-sentiment-dataset";
    e.files = {"twitter_sentiment_data.csv"};

    e.schema.name = "climate";
    e.schema.labels = {"Anti", "Neutral", "Pro", "News"};
    e.schema.column_map = {{"sentiment", "label"}, {"message", "text"}, {"tweetid", "id"}};
    e.schema.label_decoder = {{"-1", "Anti"}, {"0", "Neutral"}, {"1", "Pro"}, {"2", "News"}};

    e.baseline = raw_mnb_baseline();

    // min_count 3, stopwords kept, unigrams+bigrams, full prep, strong l2
    e.tuned.prep.normalize = true;
    e.tuned.prep.lowercase = true;
    e.tuned.prep.remove_stopwords = false;
    e.tuned.prep.stem = true;
    e.tuned.ngram = {1, 2};
    e.tuned.min_count = 3;
    e.tuned.weighting = Weighting::counts;
    e.tuned.model = ModelKind::logreg;
    e.tuned.logreg.penalty = models::Penalty::l2;
    e.tuned.logreg.C = 0.31;
    e.tuned.logreg.class_weight_mode = models::ClassWeightMode::none;

    e.scoring = eval::Scoring::weighted_f1;
    e.references = {
        {"baseline_weighted_f1", "baseline MNB weighted F1 (holdout)", "Table 3", 0.64, 0.05, true},
        {"baseline_tfidf_weighted_f1", "baseline MNB + TF-IDF weighted F1 (holdout)",
         "Sec. 4.2", 0.51, 0.0, true},
        {"tfidf_margin", "BoW weighted F1 minus TF-IDF weighted F1, at least", "Sec. 4.2",
         0.05, 0.0, true},
        {"tuned_weighted_f1", "tuned LR weighted F1 (holdout)", "Table 5", 0.78, 0.04, true},
        {"tuned_cv_weighted_f1", "tuned LR 10-fold CV mean weighted F1 (train)", "Sec. 4.2",
         0.71, 0.04, true},
        {"two_stage_slack", "two-stage cascade allowed gain over single model", "Sec. 4.2",
         0.02, 0.0, true},
        {"bert_weighted_f1", "BERT weighted F1 (holdout)", "Table 6", 0.80, 0.0, false},
    };
    return e;
}

DatasetEntry coronavirus_entry() {
    DatasetEntry e;
    e.name = "coronavirus";
    e.source_url = "https://www.kaggle.com/datasets/datatattle/covid-19-nlp-text-classification";
    e.files = {"Corona_NLP_train.csv"};

    e.schema.name = "coronavirus";
    e.schema.labels = {"Extremely Negative", "Negative", "Neutral", "Positive",
                       "Extremely Positive"};
    e.schema.column_map = {{"UserName", "id"},
                           {"Location", "location"},
                           {"TweetAt", "date"},
                           {"OriginalTweet", "text"},
                           {"Sentiment", "label"}};

    e.three_class_merge = {{"Extremely Negative", "Negative"},
                           {"Negative", "Negative"},
                           {"Neutral", "Neutral"},
                           {"Positive", "Positive"},
                           {"Extremely Positive", "Positive"}};

    e.baseline = raw_mnb_baseline();

    // full prep, unigrams, occurrence threshold 20, l2 C = 0.5
    e.tuned.prep.normalize = true;
    e.tuned.prep.lowercase = true;
    e.tuned.prep.remove_stopwords = false;
    e.tuned.prep.stem = true;
    e.tuned.ngram = {1, 1};
    e.tuned.min_count = 20;
    e.tuned.weighting = Weighting::counts;
    e.tuned.model = ModelKind::logreg;
    e.tuned.logreg.penalty = models::Penalty::l2;
    e.tuned.logreg.C = 0.5;
    e.tuned.logreg.class_weight_mode = models::ClassWeightMode::none;

    e.scoring = eval::Scoring::weighted_f1;
    e.references = {
        {"baseline_weighted_f1", "baseline MNB weighted F1, 3 classes (holdout)", "Table 7",
         0.66, 0.05, true},
        {"baseline_accuracy", "baseline MNB accuracy, 3 classes (holdout)", "Table 7", 0.67,
         0.05, true},
        {"tuned_weighted_f1", "tuned LR weighted F1, 3 classes (holdout)", "Table 9", 0.81,
         0.04, true},
        {"tuned_accuracy", "tuned LR accuracy, 3 classes (holdout)", "Table 9", 0.81, 0.04,
         true},
        {"tuned5_weighted_f1", "tuned LR weighted F1, 5 classes (holdout)", "Table 9", 0.62,
         0.04, true},
        {"bert_weighted_f1", "BERT weighted F1, 3 classes", "Table 9", 0.91, 0.0, false},
        {"bert_accuracy", "BERT accuracy, 3 classes", "Table 9", 0.91, 0.0, false},
        {"bert5_weighted_f1", "BERT weighted F1, 5 classes", "Table 9", 0.79, 0.0, false},
        {"bert5_accuracy", "BERT accuracy, 5 classes", "Table 9", 0.79, 0.0, false},
    };
    return e;
}

DatasetEntry disaster_entry() {
    DatasetEntry e;
    e.name = "disaster";
    e.source_url = "https://www.kaggle.com/competitions/nlp-getting-started/data";
    e.files = {"train.csv", "test.csv"};

    e.schema.name = "disaster";
    e.schema.labels = {"not_disaster", "disaster"};
    e.schema.column_map = {{"id", "id"},
                           {"keyword", "keyword"},
                           {"location", "location"},
                           {"text", "text"},
                           {"target", "label"}};
    e.schema.label_decoder = {{"0", "not_disaster"}, {"1", "disaster"}};

    e.baseline = raw_mnb_baseline();

    // raw text (no normalization/stemming), stopwords removed, unigrams,
    // occurrence threshold 3, l2 C = 0.31
    e.tuned.prep.normalize = false;
    e.tuned.prep.lowercase = true;
    e.tuned.prep.remove_stopwords = true;
    e.tuned.prep.stem = false;
    e.tuned.ngram = {1, 1};
    e.tuned.min_count = 3;
    e.tuned.weighting = Weighting::counts;
    e.tuned.model = ModelKind::logreg;
    e.tuned.logreg.penalty = models::Penalty::l2;
    e.tuned.logreg.C = 0.31;
    e.tuned.logreg.class_weight_mode = models::ClassWeightMode::none;

    e.scoring = eval::Scoring::accuracy;
    e.references = {
        {"baseline_cv_accuracy", "baseline MNB 10-fold CV accuracy (train)", "Sec. 4.4",
         0.795, 0.02, true},
        {"features_mnb_cv_accuracy", "MNB 10-fold CV accuracy, tuned features (train)",
         "Table 10", 0.805, 0.02, true},
        {"features_lr_cv_accuracy", "LR 10-fold CV accuracy, tuned features (train)",
         "Table 10", 0.805, 0.02, true},
        {"kaggle_accuracy", "final LR accuracy on the competition test set", "Sec. 4.4",
         0.801, 0.0, false},
        {"bert_accuracy", "BERT accuracy on the competition test set", "Sec. 4.4", 0.838,
         0.0, false},
    };
    return e;
}

} // namespace

const std::vector<DatasetEntry>& manifest() {
    static const std::vector<DatasetEntry> entries = {climate_entry(), coronavirus_entry(),
                                                      disaster_entry()};
    return entries;
}

const DatasetEntry& manifest_entry(const std::string& name) {
    for (const DatasetEntry& e : manifest()) {
        if (e.name == name) return e;
    }
    std::string names;
    for (const DatasetEntry& e : manifest()) {
        if (!names.empty()) names += ", ";
        names += e.name;
    }
    throw UsageError("unknown dataset \"" + name + "\" (valid: " + names + ")");
}

const ReferenceScore& reference(const DatasetEntry& entry, const std::string& key) {
    for (const ReferenceScore& r : entry.references) {
        if (r.key == key) return r;
    }
    throw UsageError("dataset " + entry.name + " has no reference \"" + key + "\"");
}

} // namespace tweetkit::app
