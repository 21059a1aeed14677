// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/models/logistic_regression.hpp"
#include "tweetkit/models/naive_bayes.hpp"
#include "tweetkit/models/optimizer.hpp"

#include "tweetkit/error.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace tweetkit;
using namespace tweetkit::models;
using features::FeatureMatrix;
using features::FeatureVector;

namespace {

FeatureMatrix matrix(std::size_t n_cols, std::vector<FeatureVector> rows) {
    FeatureMatrix m;
    m.n_cols = n_cols;
    m.rows = std::move(rows);
    return m;
}

// class A: "a a b"; class B: "b b c"; vocab {a,b,c}
FeatureMatrix toy_matrix() {
    return matrix(3, {FeatureVector{{{0, 2.0}, {1, 1.0}}}, FeatureVector{{{1, 2.0}, {2, 1.0}}}});
}

} // namespace

TEST_CASE("train_mnb: smoothing formula by hand") {
    const auto model = train_mnb(toy_matrix(), {0, 1}, {"A", "B"}, 1.0);
    CHECK(model.log_prob[0] == doctest::Approx(std::log(3.0 / 6.0))); // (2+1)/(3+3)
    CHECK(model.log_prob[1] == doctest::Approx(std::log(2.0 / 6.0)));
    CHECK(model.log_prob[3 + 1] == doctest::Approx(std::log(3.0 / 6.0))); // B's b
    CHECK(model.log_prior[0] == doctest::Approx(std::log(0.5)));
    CHECK(model.log_prior[1] == doctest::Approx(std::log(0.5)));
}

TEST_CASE("train_mnb: uniform priors for balanced classes") {
    const auto model = train_mnb(toy_matrix(), {0, 1}, {"A", "B"}, 0.5);
    for (double lp : model.log_prior) CHECK(lp == doctest::Approx(std::log(1.0 / 2.0)));
}

TEST_CASE("train_mnb: preconditions") {
    CHECK_THROWS_AS(train_mnb(toy_matrix(), {0, 1}, {"A", "B"}, 0.0), UsageError);
    CHECK_THROWS_AS(train_mnb(FeatureMatrix{}, {}, {"A"}, 1.0), UsageError);
    CHECK_THROWS_AS(train_mnb(toy_matrix(), {0, 0}, {"A", "B"}, 1.0), UsageError); // B empty
}

TEST_CASE("predict_mnb: posterior comparison by hand") {
    const auto model = train_mnb(toy_matrix(), {0, 1}, {"A", "B"}, 1.0);
    const auto pred = predict_mnb(model, FeatureVector{{{0, 1.0}}});
    CHECK(pred.label == 0); // ln(1/2)+ln(3/6) beats ln(1/2)+ln(1/6)
    CHECK(pred.log_scores[0] == doctest::Approx(std::log(0.5) + std::log(3.0 / 6.0)));
    CHECK(pred.log_scores[1] == doctest::Approx(std::log(0.5) + std::log(1.0 / 6.0)));
}

TEST_CASE("predict_mnb: empty vector falls back to priors") {
    // 2 docs of A, 1 of B: priors decide
    const auto model = train_mnb(
        matrix(2, {FeatureVector{{{0, 1.0}}}, FeatureVector{{{0, 1.0}}},
                   FeatureVector{{{1, 1.0}}}}),
        {0, 0, 1}, {"A", "B"}, 1.0);
    CHECK(predict_mnb(model, FeatureVector{}).label == 0);
}

TEST_CASE("predict_mnb: symmetric ties go to the lowest class index") {
    const auto model = train_mnb(
        matrix(2, {FeatureVector{{{0, 1.0}}}, FeatureVector{{{1, 1.0}}}}),
        {0, 1}, {"A", "B"}, 1.0);
    CHECK(predict_mnb(model, FeatureVector{}).label == 0);
    CHECK(predict_mnb(model, FeatureVector{{{0, 1.0}, {1, 1.0}}}).label == 0);
}

TEST_CASE("mnb per-class term distributions sum to one") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t V = 1 + rng() % 6;
        const std::size_t n = 2 + rng() % 7;
        std::vector<FeatureVector> rows;
        std::vector<std::int32_t> y;
        for (std::size_t i = 0; i < n; ++i) {
            FeatureVector fv;
            for (std::uint32_t j = 0; j < V; ++j) {
                if (rng() % 2 == 0) fv.entries.emplace_back(j, static_cast<double>(1 + rng() % 3));
            }
            rows.push_back(std::move(fv));
            y.push_back(static_cast<std::int32_t>(i % 2));
        }
        const auto model = train_mnb(matrix(V, std::move(rows)), y, {"A", "B"}, 0.7);
        for (std::size_t c = 0; c < 2; ++c) {
            double sum = 0.0;
            for (std::size_t j = 0; j < V; ++j) sum += std::exp(model.log_prob[c * V + j]);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("predict_mnb agrees with a raw-count posterior oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t V = 1 + rng() % 5;    // <= 5 terms
        const std::size_t K = 2 + rng() % 2;
        const std::size_t n = K + rng() % (9 - K); // <= 8 docs, every class present
        const double alpha = 0.25 * static_cast<double>(1 + rng() % 8);
        std::vector<FeatureVector> rows;
        std::vector<std::int32_t> y;
        for (std::size_t i = 0; i < n; ++i) {
            FeatureVector fv;
            for (std::uint32_t j = 0; j < V; ++j) {
                if (rng() % 2 == 0) fv.entries.emplace_back(j, static_cast<double>(1 + rng() % 3));
            }
            rows.push_back(std::move(fv));
            y.push_back(static_cast<std::int32_t>(i < K ? i : rng() % K)); // every class present
        }
        const FeatureMatrix X = matrix(V, std::move(rows));
        std::vector<std::string> classes;
        for (std::size_t c = 0; c < K; ++c) classes.push_back("c" + std::to_string(c));
        const auto model = train_mnb(X, y, classes, alpha);

        // query document
        FeatureVector q;
        for (std::uint32_t j = 0; j < V; ++j) {
            if (rng() % 2 == 0) q.entries.emplace_back(j, static_cast<double>(rng() % 3));
        }

        // oracle: smoothed posterior straight from raw counts
        std::vector<double> oracle(K, 0.0);
        for (std::size_t c = 0; c < K; ++c) {
            double n_c = 0.0, total_c = 0.0;
            std::vector<double> term(V, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                if (static_cast<std::size_t>(y[i]) != c) continue;
                n_c += 1.0;
                for (const auto& [j, w] : X.rows[i].entries) {
                    term[j] += w;
                    total_c += w;
                }
            }
            oracle[c] = std::log(n_c / static_cast<double>(n));
            for (const auto& [j, w] : q.entries) {
                oracle[c] += w * std::log((term[j] + alpha) /
                                          (total_c + alpha * static_cast<double>(V)));
            }
        }
        std::size_t oracle_label = 0;
        for (std::size_t c = 1; c < K; ++c) {
            if (oracle[c] > oracle[oracle_label]) oracle_label = c;
        }

        const auto pred = predict_mnb(model, q);
        CHECK(static_cast<std::size_t>(pred.label) == oracle_label);
        for (std::size_t c = 0; c < K; ++c) {
            CHECK(pred.log_scores[c] == doctest::Approx(oracle[c]).epsilon(1e-10));
        }
    }
}

namespace {

struct RandomInstance {
    FeatureMatrix X;
    std::vector<std::int32_t> y;
    std::size_t K = 2;
};

RandomInstance random_instance(std::mt19937_64& rng, std::size_t max_docs = 6) {
    RandomInstance inst;
    inst.K = 2 + rng() % 3;
    const std::size_t V = 1 + rng() % 5;
    const std::size_t n = std::max<std::size_t>(inst.K, 2 + rng() % max_docs);
    std::vector<FeatureVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        FeatureVector fv;
        for (std::uint32_t j = 0; j < V; ++j) {
            if (rng() % 2 == 0) {
                fv.entries.emplace_back(j, 0.5 + 0.5 * static_cast<double>(rng() % 5));
            }
        }
        rows.push_back(std::move(fv));
        inst.y.push_back(static_cast<std::int32_t>(i < inst.K ? i : rng() % inst.K));
    }
    inst.X = matrix(V, std::move(rows));
    return inst;
}

} // namespace

TEST_CASE("loss at zero parameters is N * ln K") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const RandomInstance inst = random_instance(rng);
        TrainConfig config;
        config.penalty = Penalty::none;
        const std::size_t P = inst.K * inst.X.n_cols + inst.K;
        std::vector<double> params(P, 0.0), grad(P, 0.0);
        const double loss = loss_and_gradient(params, inst.X, inst.y, inst.K, config, grad);
        CHECK(loss == doctest::Approx(static_cast<double>(inst.X.rows.size()) *
                                      std::log(static_cast<double>(inst.K)))
                          .epsilon(1e-12));
    }
}

TEST_CASE("analytic gradient matches central finite differences") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> pdist(-1.0, 1.0);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const RandomInstance inst = random_instance(rng);
        TrainConfig config;
        const int which = trial % 3;
        config.penalty = which == 0 ? Penalty::none : (which == 1 ? Penalty::l2 : Penalty::l1);
        config.C = 0.5 + 0.5 * static_cast<double>(rng() % 4);
        config.class_weight_mode =
            trial % 4 == 0 ? ClassWeightMode::balanced : ClassWeightMode::none;

        const std::size_t P = inst.K * inst.X.n_cols + inst.K;
        std::vector<double> params(P), grad(P);
        for (double& p : params) {
            p = pdist(rng);
            if (config.penalty == Penalty::l1 && std::fabs(p) < 0.05) {
                p = p < 0 ? p - 0.1 : p + 0.1; // keep away from the |w| kink
            }
        }
        const double loss = loss_and_gradient(params, inst.X, inst.y, inst.K, config, grad);
        CHECK(std::isfinite(loss));

        const double h = 1e-5;
        for (std::size_t j = 0; j < P; ++j) {
            std::vector<double> tmp = params, dummy(P);
            tmp[j] = params[j] + h;
            const double up = loss_and_gradient(tmp, inst.X, inst.y, inst.K, config, dummy);
            tmp[j] = params[j] - h;
            const double down = loss_and_gradient(tmp, inst.X, inst.y, inst.K, config, dummy);
            const double fd = (up - down) / (2.0 * h);
            CHECK(std::fabs(grad[j] - fd) <= 1e-6 + 1e-5 * std::fabs(grad[j]));
        }
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("adding l2 raises the loss by exactly the penalty term") {
    std::mt19937_64 rng(43);
    const RandomInstance inst = random_instance(rng);
    const std::size_t P = inst.K * inst.X.n_cols + inst.K;
    std::vector<double> params(P), grad(P);
    std::uniform_real_distribution<double> pdist(-2.0, 2.0);
    for (double& p : params) p = pdist(rng);

    TrainConfig plain;
    plain.penalty = Penalty::none;
    TrainConfig l2;
    l2.penalty = Penalty::l2;
    l2.C = 0.31;

    const double base = loss_and_gradient(params, inst.X, inst.y, inst.K, plain, grad);
    const double with_l2 = loss_and_gradient(params, inst.X, inst.y, inst.K, l2, grad);
    double w2 = 0.0;
    for (std::size_t j = 0; j < inst.K * inst.X.n_cols; ++j) w2 += params[j] * params[j];
    CHECK(with_l2 - base == doctest::Approx((1.0 / l2.C) * 0.5 * w2).epsilon(1e-12));
}

TEST_CASE("strong regularization drives weights to zero and bias to priors") {
    // 14 docs of class 0, 6 of class 1
    std::vector<FeatureVector> rows;
    std::vector<std::int32_t> y;
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i) {
        FeatureVector fv;
        fv.entries.emplace_back(static_cast<std::uint32_t>(rng() % 3), 1.0 + rng() % 2);
        rows.push_back(std::move(fv));
        y.push_back(i < 14 ? 0 : 1);
    }
    TrainConfig config;
    config.penalty = Penalty::l2;
    config.C = 1e-6;
    config.tolerance = 1e-9;
    config.max_iterations = 3000;
    const auto model = train_logreg(matrix(3, std::move(rows)), y, {"a", "b"}, config);

    for (double w : model.weights) CHECK(std::fabs(w) < 1e-3);
    const auto p = softmax(model.bias);
    CHECK(p[0] == doctest::Approx(0.7).epsilon(1e-3));
    CHECK(p[1] == doctest::Approx(0.3).epsilon(1e-3));
}

TEST_CASE("two separable points are both classified correctly") {
    const FeatureMatrix X =
        matrix(2, {FeatureVector{{{0, 1.0}}}, FeatureVector{{{1, 1.0}}}});
    const std::vector<std::int32_t> y{0, 1};
    TrainConfig config;
    config.penalty = Penalty::l2;
    config.C = 1.0;

    // brute-force gradient-descent oracle on the same objective
    const std::size_t P = 2 * 2 + 2;
    std::vector<double> params(P, 0.0), grad(P);
    for (int it = 0; it < 20000; ++it) {
        loss_and_gradient(params, X, y, 2, config, grad);
        for (std::size_t j = 0; j < P; ++j) params[j] -= 0.5 * grad[j];
    }
    auto oracle_predict = [&](const FeatureVector& x) {
        double s0 = params[4], s1 = params[5];
        for (const auto& [j, w] : x.entries) {
            s0 += w * params[0 * 2 + j];
            s1 += w * params[1 * 2 + j];
        }
        return s0 >= s1 ? 0 : 1;
    };
    CHECK(oracle_predict(X.rows[0]) == 0);
    CHECK(oracle_predict(X.rows[1]) == 1);

    const auto model = train_logreg(X, y, {"a", "b"}, config);
    CHECK(predict_logreg(model, X.rows[0]).label == 0);
    CHECK(predict_logreg(model, X.rows[1]).label == 1);
    CHECK(model.fit.converged);
}

TEST_CASE("doubling a class weight raises its recall on a fixed imbalanced set") {
    // 20 points, one feature; the minority class overlaps the majority at x=3.
    std::vector<FeatureVector> rows;
    std::vector<std::int32_t> y;
    auto add = [&](double x, std::int32_t label, int copies) {
        for (int i = 0; i < copies; ++i) {
            rows.push_back(FeatureVector{{{0, x}}});
            y.push_back(label);
        }
    };
    add(1.0, 0, 9);
    add(2.0, 0, 4);
    add(3.0, 0, 3);
    add(3.0, 1, 2);
    add(4.0, 1, 2);
    REQUIRE(rows.size() == 20);
    const FeatureMatrix X = matrix(1, std::move(rows));

    auto recall_minority = [&](const TrainConfig& config) {
        const auto model = train_logreg(X, y, {"maj", "min"}, config);
        std::size_t tp = 0, fn = 0;
        for (std::size_t i = 0; i < X.rows.size(); ++i) {
            if (y[i] != 1) continue;
            (predict_logreg(model, X.rows[i]).label == 1 ? tp : fn) += 1;
        }
        return static_cast<double>(tp) / static_cast<double>(tp + fn);
    };

    TrainConfig plain;
    plain.penalty = Penalty::l2;
    plain.C = 1.0;
    TrainConfig doubled = plain;
    doubled.class_weight_mode = ClassWeightMode::custom;
    doubled.custom_class_weights = {1.0, 2.0};

    CHECK(recall_minority(doubled) > recall_minority(plain));
}

TEST_CASE("optimization from two starts reaches the same optimum") {
    std::mt19937_64 rng(53);
    const RandomInstance inst = random_instance(rng, 24);
    TrainConfig config;
    config.penalty = Penalty::l2;
    config.C = 1.0;
    config.tolerance = 1e-10;
    config.max_iterations = 3000;

    std::vector<std::string> classes;
    for (std::size_t k = 0; k < inst.K; ++k) classes.push_back("c" + std::to_string(k));
    const auto model = train_logreg(inst.X, inst.y, classes, config);

    // second start: random initialization through the optimizer directly
    const std::size_t P = inst.K * inst.X.n_cols + inst.K;
    std::vector<double> x0(P);
    std::uniform_real_distribution<double> pdist(-0.5, 0.5);
    for (double& p : x0) p = pdist(rng);
    Objective objective = [&](std::span<const double> params, std::span<double> grad) {
        return loss_and_gradient(params, inst.X, inst.y, inst.K, config, grad);
    };
    MinimizeOptions opts;
    opts.tolerance = 1e-10;
    opts.max_iterations = 3000;
    const auto res = minimize(objective, x0, opts);

    CHECK(res.loss == doctest::Approx(model.fit.final_loss).epsilon(1e-6));

    // identical argmax predictions on the training set
    LogRegModel other = model;
    other.weights.assign(x0.begin(), x0.begin() + static_cast<std::ptrdiff_t>(P - inst.K));
    other.bias.assign(x0.end() - static_cast<std::ptrdiff_t>(inst.K), x0.end());
    for (const auto& row : inst.X.rows) {
        CHECK(predict_logreg(model, row).label == predict_logreg(other, row).label);
    }
}

TEST_CASE("l2 weight norm shrinks as regularization strengthens") {
    std::mt19937_64 rng(59);
    const RandomInstance inst = random_instance(rng, 30);
    double previous = -1.0;
    for (double c : {2.0, 1.0, 0.5, 0.31, 0.1}) { // 1/C increases left to right
        TrainConfig config;
        config.penalty = Penalty::l2;
        config.C = c;
        config.tolerance = 1e-9;
        config.max_iterations = 2000;
        std::vector<std::string> classes;
        for (std::size_t k = 0; k < inst.K; ++k) classes.push_back("c" + std::to_string(k));
        const auto model = train_logreg(inst.X, inst.y, classes, config);
        double norm = 0.0;
        for (double w : model.weights) norm += w * w;
        norm = std::sqrt(norm);
        if (previous >= 0.0) CHECK(norm <= previous + 1e-8);
        previous = norm;
    }
}

TEST_CASE("l1 training produces sparse weights") {
    std::mt19937_64 rng(61);
    const RandomInstance inst = random_instance(rng, 30);
    TrainConfig config;
    config.penalty = Penalty::l1;
    config.C = 0.05; // strong
    config.tolerance = 1e-8;
    config.max_iterations = 3000;
    std::vector<std::string> classes;
    for (std::size_t k = 0; k < inst.K; ++k) classes.push_back("c" + std::to_string(k));
    const auto model = train_logreg(inst.X, inst.y, classes, config);
    std::size_t zeros = 0;
    for (double w : model.weights) zeros += (w == 0.0) ? 1 : 0;
    CHECK(zeros > 0); // shrinkage produces exact zeros
}

TEST_CASE("softmax: zero parameters mean uniform probabilities") {
    LogRegModel model;
    model.classes = {"a", "b", "c"};
    model.n_features = 2;
    model.weights.assign(6, 0.0);
    model.bias.assign(3, 0.0);
    const auto pred = predict_logreg(model, FeatureVector{{{0, 5.0}}});
    for (double p : pred.probabilities) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(pred.label == 0); // tie to lowest index
}

TEST_CASE("softmax: probabilities sum to one and shifts cancel") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> dist(-30.0, 30.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t K = 2 + rng() % 4;
        std::vector<double> scores(K);
        for (double& s : scores) s = dist(rng);
        const auto p = softmax(scores);
        double sum = 0.0;
        for (double v : p) sum += v;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

        std::vector<double> shifted = scores;
        const double shift = dist(rng);
        for (double& s : shifted) s += shift;
        const auto q = softmax(shifted);
        for (std::size_t c = 0; c < K; ++c) {
            CHECK(p[c] == doctest::Approx(q[c]).epsilon(1e-12));
        }
    }
}

TEST_CASE("train_logreg: errors and non-convergence flag") {
    const FeatureMatrix X = matrix(2, {FeatureVector{{{0, 1.0}}}, FeatureVector{{{1, 1.0}}}});
    CHECK_THROWS_AS(train_logreg(X, {0, 0}, {"a", "b"}, TrainConfig{}), UsageError);
    TrainConfig bad;
    bad.C = 0.0;
    CHECK_THROWS_AS(train_logreg(X, {0, 1}, {"a", "b"}, bad), UsageError);

    TrainConfig one_step;
    one_step.max_iterations = 1;
    one_step.tolerance = 1e-14;
    const auto model = train_logreg(X, {0, 1}, {"a", "b"}, one_step);
    CHECK(!model.fit.converged);
    CHECK(model.fit.iterations == 1);
}
