// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/app/bundle.hpp"

#include "tweetkit/error.hpp"

#include "json.hpp"

#include <fstream>

namespace tweetkit::app {

using nlohmann::json;

namespace {

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

const char* penalty_name(models::Penalty p) {
    switch (p) {
    case models::Penalty::none: return "none";
    case models::Penalty::l1: return "l1";
    case models::Penalty::l2: return "l2";
    }
    return "none";
}

models::Penalty penalty_from(const std::string& s) {
    if (s == "none") return models::Penalty::none;
    if (s == "l1") return models::Penalty::l1;
    if (s == "l2") return models::Penalty::l2;
    throw BundleError("bundle: unknown penalty \"" + s + "\"");
}

const char* weight_mode_name(models::ClassWeightMode m) {
    switch (m) {
    case models::ClassWeightMode::none: return "none";
    case models::ClassWeightMode::balanced: return "balanced";
    case models::ClassWeightMode::custom: return "custom";
    }
    return "none";
}

models::ClassWeightMode weight_mode_from(const std::string& s) {
    if (s == "none") return models::ClassWeightMode::none;
    if (s == "balanced") return models::ClassWeightMode::balanced;
    if (s == "custom") return models::ClassWeightMode::custom;
    throw BundleError("bundle: unknown class weight mode \"" + s + "\"");
}

json config_to_json(const PipelineConfig& c) {
    json rules{{"url", c.prep.rules.url},
               {"email", c.prep.rules.email},
               {"phone", c.prep.rules.phone},
               {"money", c.prep.rules.money},
               {"number", c.prep.rules.number}};
    json prep{{"normalize", c.prep.normalize},
              {"lowercase", c.prep.lowercase},
              {"remove_stopwords", c.prep.remove_stopwords},
              {"stem", c.prep.stem},
              {"rules", std::move(rules)},
              {"stopword_list", c.prep.stopword_list}};
    json logreg{{"penalty", penalty_name(c.logreg.penalty)},
                {"C", c.logreg.C},
                {"class_weights", weight_mode_name(c.logreg.class_weight_mode)},
                {"custom_class_weights", c.logreg.custom_class_weights},
                {"tolerance", c.logreg.tolerance},
                {"max_iterations", c.logreg.max_iterations},
                {"seed", c.logreg.seed}};
    return json{{"prep", std::move(prep)},
                {"ngram", {c.ngram.lo, c.ngram.hi}},
                {"min_count", c.min_count},
                {"weighting", c.weighting == Weighting::tfidf ? "tfidf" : "counts"},
                {"model", c.model == ModelKind::logreg ? "logreg" : "mnb"},
                {"mnb_alpha", c.mnb_alpha},
                {"logreg", std::move(logreg)}};
}

PipelineConfig config_from_json(const json& j) {
    PipelineConfig c;
    const json& prep = j.at("prep");
    c.prep.normalize = prep.at("normalize").get<bool>();
    c.prep.lowercase = prep.at("lowercase").get<bool>();
    c.prep.remove_stopwords = prep.at("remove_stopwords").get<bool>();
    c.prep.stem = prep.at("stem").get<bool>();
    const json& rules = prep.at("rules");
    c.prep.rules.url = rules.at("url").get<bool>();
    c.prep.rules.email = rules.at("email").get<bool>();
    c.prep.rules.phone = rules.at("phone").get<bool>();
    c.prep.rules.money = rules.at("money").get<bool>();
    c.prep.rules.number = rules.at("number").get<bool>();
    c.prep.stopword_list = prep.at("stopword_list").get<std::vector<std::string>>();
    c.ngram.lo = j.at("ngram").at(0).get<int>();
    c.ngram.hi = j.at("ngram").at(1).get<int>();
    c.min_count = j.at("min_count").get<std::uint64_t>();
    c.weighting = j.at("weighting").get<std::string>() == "tfidf" ? Weighting::tfidf
                                                                  : Weighting::counts;
    c.model = j.at("model").get<std::string>() == "logreg" ? ModelKind::logreg : ModelKind::mnb;
    c.mnb_alpha = j.at("mnb_alpha").get<double>();
    const json& lr = j.at("logreg");
    c.logreg.penalty = penalty_from(lr.at("penalty").get<std::string>());
    c.logreg.C = lr.at("C").get<double>();
    c.logreg.class_weight_mode = weight_mode_from(lr.at("class_weights").get<std::string>());
    c.logreg.custom_class_weights = lr.at("custom_class_weights").get<std::vector<double>>();
    c.logreg.tolerance = lr.at("tolerance").get<double>();
    c.logreg.max_iterations = lr.at("max_iterations").get<int>();
    c.logreg.seed = lr.at("seed").get<std::uint64_t>();
    return c;
}

json pipeline_to_json(const FittedPipeline& p) {
    json vocab{{"terms", p.vocab.terms()}};
    std::vector<std::uint64_t> corpus_count(p.vocab.size()), doc_count(p.vocab.size());
    for (std::size_t j = 0; j < p.vocab.size(); ++j) {
        corpus_count[j] = p.vocab.corpus_count(j);
        doc_count[j] = p.vocab.doc_count(j);
    }
    vocab["corpus_count"] = corpus_count;
    vocab["doc_count"] = doc_count;

    json out{{"config", config_to_json(p.config)},
             {"classes", p.classes},
             {"vocabulary", std::move(vocab)}};

    if (p.idf.has_value()) {
        out["idf"] = json{{"n_docs", p.idf->n_docs}, {"idf", p.idf->idf}};
    } else {
        out["idf"] = nullptr;
    }

    if (p.mnb.has_value()) {
        out["model"] = json{{"type", "mnb"},
                            {"alpha", p.mnb->alpha},
                            {"log_prior", p.mnb->log_prior},
                            {"log_prob", p.mnb->log_prob}};
    } else if (p.logreg.has_value()) {
        const auto& m = *p.logreg;
        out["model"] = json{{"type", "logreg"},
                            {"weights", m.weights},
                            {"bias", m.bias},
                            {"penalty", penalty_name(m.penalty)},
                            {"C", m.C},
                            {"class_weights", m.class_weights},
                            {"fit",
                             {{"iterations", m.fit.iterations},
                              {"grad_inf_norm", m.fit.grad_inf_norm},
                              {"converged", m.fit.converged},
                              {"final_loss", m.fit.final_loss}}}};
    } else {
        throw BundleError("bundle: pipeline has no trained model");
    }
    return out;
}

FittedPipeline pipeline_from_json(const json& j) {
    FittedPipeline p;
    p.config = config_from_json(j.at("config"));
    p.classes = j.at("classes").get<std::vector<std::string>>();

    const json& vocab = j.at("vocabulary");
    p.vocab = features::Vocabulary(
        vocab.at("terms").get<std::vector<std::string>>(),
        vocab.at("corpus_count").get<std::vector<std::uint64_t>>(),
        vocab.at("doc_count").get<std::vector<std::uint64_t>>(), p.config.ngram,
        p.config.min_count);

    if (!j.at("idf").is_null()) {
        features::IdfModel idf;
        idf.n_docs = j.at("idf").at("n_docs").get<std::uint64_t>();
        idf.idf = j.at("idf").at("idf").get<std::vector<double>>();
        p.idf = std::move(idf);
    }

    const json& model = j.at("model");
    const std::string type = model.at("type").get<std::string>();
    if (type == "mnb") {
        models::MnbModel m;
        m.classes = p.classes;
        m.n_features = p.vocab.size();
        m.alpha = model.at("alpha").get<double>();
        m.log_prior = model.at("log_prior").get<std::vector<double>>();
        m.log_prob = model.at("log_prob").get<std::vector<double>>();
        if (m.log_prob.size() != m.classes.size() * m.n_features) {
            throw BundleError("bundle: mnb parameter shape does not match vocabulary");
        }
        p.mnb = std::move(m);
    } else if (type == "logreg") {
        models::LogRegModel m;
        m.classes = p.classes;
        m.n_features = p.vocab.size();
        m.weights = model.at("weights").get<std::vector<double>>();
        m.bias = model.at("bias").get<std::vector<double>>();
        m.penalty = penalty_from(model.at("penalty").get<std::string>());
        m.C = model.at("C").get<double>();
        m.class_weights = model.at("class_weights").get<std::vector<double>>();
        const json& fit = model.at("fit");
        m.fit.iterations = fit.at("iterations").get<int>();
        m.fit.grad_inf_norm = fit.at("grad_inf_norm").get<double>();
        m.fit.converged = fit.at("converged").get<bool>();
        m.fit.final_loss = fit.at("final_loss").get<double>();
        if (m.weights.size() != m.classes.size() * m.n_features ||
            m.bias.size() != m.classes.size()) {
            throw BundleError("bundle: logreg parameter shape does not match vocabulary");
        }
        p.logreg = std::move(m);
    } else {
        throw BundleError("bundle: unknown model type \"" + type + "\"");
    }
    return p;
}

} // namespace

std::string bundle_to_json(const ModelBundle& bundle) {
    json doc{{"format_version", bundle.format_version},
             {"kind", "tweetkit-model-bundle"},
             {"dataset", bundle.dataset_name},
             {"seed", bundle.seed},
             {"train_rows", bundle.train_rows},
             {"created_unix", bundle.created_unix},
             {"pipeline", pipeline_to_json(bundle.pipeline)}};
    doc["checksum"] = "fnv1a64:" + fnv1a64_hex(doc.dump());
    return doc.dump();
}

ModelBundle bundle_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw BundleError(std::string("bundle: corrupted file: ") + e.what());
    }
    try {
        const int version = doc.at("format_version").get<int>();
        if (version != kBundleFormatVersion) {
            throw BundleError("bundle: unsupported format_version " + std::to_string(version) +
                              " (expected " + std::to_string(kBundleFormatVersion) + ")");
        }
        const std::string checksum = doc.at("checksum").get<std::string>();
        doc.erase("checksum");
        const std::string recomputed = "fnv1a64:" + fnv1a64_hex(doc.dump());
        if (checksum != recomputed) {
            throw BundleError("bundle: checksum mismatch, file is corrupted");
        }
        ModelBundle bundle;
        bundle.format_version = version;
        bundle.dataset_name = doc.at("dataset").get<std::string>();
        bundle.seed = doc.at("seed").get<std::uint64_t>();
        bundle.train_rows = doc.at("train_rows").get<std::uint64_t>();
        bundle.created_unix = doc.at("created_unix").get<std::int64_t>();
        bundle.pipeline = pipeline_from_json(doc.at("pipeline"));
        return bundle;
    } catch (const json::exception& e) {
        throw BundleError(std::string("bundle: malformed document: ") + e.what());
    }
}

void save_bundle(const ModelBundle& bundle, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("bundle: cannot write " + path.string());
    const std::string text = bundle_to_json(bundle);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw DataError("bundle: short write to " + path.string());
}

ModelBundle load_bundle(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("bundle: cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bundle_from_json(text);
}

} // namespace tweetkit::app
