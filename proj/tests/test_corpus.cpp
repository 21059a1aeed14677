// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/corpus/csv.hpp"
#include "tweetkit/corpus/dataset.hpp"
#include "tweetkit/error.hpp"

#include "doctest.h"
#include "testutil.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace tweetkit;
using namespace tweetkit::corpus;
using testutil::TempDir;
using testutil::write_file;

namespace {

LabelSchema disaster_schema() {
    LabelSchema s;
    s.name = "disaster";
    s.labels = {"not_disaster", "disaster"};
    s.column_map = {{"id", "id"}, {"keyword", "keyword"}, {"location", "location"},
                    {"text", "text"}, {"target", "label"}};
    s.label_decoder = {{"0", "not_disaster"}, {"1", "disaster"}};
    return s;
}

} // namespace

TEST_CASE("parse_csv handles quoting, escapes and newlines") {
    const auto rows = parse_csv("a,\"b,c\",\"say \"\"hi\"\"\"\r\n1,\"two\nlines\",3\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "say \"hi\""});
    CHECK(rows[1] == std::vector<std::string>{"1", "two\nlines", "3"});
}

TEST_CASE("parse_csv rejects an unbalanced quote at end of file") {
    CHECK_THROWS_AS(parse_csv("a,\"unterminated\n"), DataError);
}

TEST_CASE("load_csv: disaster example row") {
    TempDir dir;
    write_file(dir.file("train.csv"),
               "id,keyword,location,text,target\n"
               "1,wildfires,California,\"13,000 people receive #wildfires evacuation orders in "
               "California\",1\n");
    LoadReport report;
    const auto ds = load_csv(dir.file("train.csv"), disaster_schema(), &report);
    REQUIRE(ds.size() == 1);
    CHECK(ds.documents[0].label == "disaster");
    CHECK(ds.documents[0].text ==
          "13,000 people receive #wildfires evacuation orders in California");
    CHECK(ds.documents[0].keyword == "wildfires");
    CHECK(report.encoding == "utf-8");
    CHECK(report.rows_loaded == 1);
}

TEST_CASE("load_csv: quoted newline stays inside one document") {
    TempDir dir;
    write_file(dir.file("t.csv"), "id,text,label\n1,\"line one\nline two\",x\n");
    const auto ds = load_csv(dir.file("t.csv"), testutil::simple_schema({"x"}));
    REQUIRE(ds.size() == 1);
    CHECK(ds.documents[0].text == "line one\nline two");
}

TEST_CASE("load_csv: missing required column is named") {
    TempDir dir;
    write_file(dir.file("t.csv"), "id,label\n1,x\n");
    try {
        load_csv(dir.file("t.csv"), testutil::simple_schema({"x"}));
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("text") != std::string::npos);
    }
}

TEST_CASE("load_csv: missing file") {
    CHECK_THROWS_AS(load_csv("/nonexistent/nope.csv", testutil::simple_schema({"x"})), DataError);
}

TEST_CASE("load_csv: rejected rows are reported with record numbers") {
    TempDir dir;
    write_file(dir.file("t.csv"),
               "id,text,label\n"
               "1,hello,x\n"
               "2,bad label,zzz\n"
               "3,   ,x\n"
               "1,duplicate id,x\n"
               "4,too,many,fields,x\n"
               "5,fine,x\n");
    LoadReport report;
    const auto ds = load_csv(dir.file("t.csv"), testutil::simple_schema({"x"}), &report);
    CHECK(ds.size() == 2);
    REQUIRE(report.rejected.size() == 4);
    CHECK(report.rejected[0].first == 3); // record numbers count the header
    CHECK(report.rejected[1].first == 4);
    CHECK(report.rejected[2].first == 5);
    CHECK(report.rejected[3].first == 6);
    CHECK(report.to_text().find("duplicate id") != std::string::npos);
}

TEST_CASE("load_csv: zero valid rows is an error") {
    TempDir dir;
    write_file(dir.file("t.csv"), "id,text,label\n1,hello,zzz\n");
    CHECK_THROWS_AS(load_csv(dir.file("t.csv"), testutil::simple_schema({"x"})), DataError);
}

TEST_CASE("load_csv: invalid utf-8 falls back to latin-1 for the whole file") {
    TempDir dir;
    write_file(dir.file("t.csv"), "id,text,label\n1,caf\xe9 tweet,x\n");
    LoadReport report;
    const auto ds = load_csv(dir.file("t.csv"), testutil::simple_schema({"x"}), &report);
    CHECK(report.encoding == "latin-1");
    CHECK(ds.documents[0].text == "caf\xc3\xa9 tweet");
}

TEST_CASE("map_labels merges the extreme coronavirus classes") {
    LabeledDataset ds = testutil::synthetic_dataset({{"Extremely Negative", 2},
                                                     {"Negative", 3},
                                                     {"Neutral", 2},
                                                     {"Positive", 3},
                                                     {"Extremely Positive", 2}});
    const std::map<std::string, std::string> merge{
        {"Extremely Negative", "Negative"}, {"Negative", "Negative"},
        {"Neutral", "Neutral"},             {"Positive", "Positive"},
        {"Extremely Positive", "Positive"}};
    const auto merged = map_labels(ds, merge);
    CHECK(merged.schema.labels == std::vector<std::string>{"Negative", "Neutral", "Positive"});
    CHECK(merged.size() == ds.size());
    std::size_t negatives = 0;
    for (const auto& d : merged.documents) negatives += d.label == "Negative" ? 1 : 0;
    CHECK(negatives == 5);
    // texts are untouched
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(merged.documents[i].text == ds.documents[i].text);
    }
}

TEST_CASE("map_labels: identity leaves the dataset equal") {
    const auto ds = testutil::synthetic_dataset({{"a", 3}, {"b", 2}});
    const auto out = map_labels(ds, {{"a", "a"}, {"b", "b"}});
    CHECK(out.schema.labels == ds.schema.labels);
    REQUIRE(out.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(out.documents[i].label == ds.documents[i].label);
        CHECK(out.documents[i].id == ds.documents[i].id);
    }
}

TEST_CASE("map_labels: unmapped label present in data is an error") {
    const auto ds = testutil::synthetic_dataset({{"a", 2}, {"Neutral", 2}});
    CHECK_THROWS_AS(map_labels(ds, {{"a", "a"}}), DataError);
}

TEST_CASE("stratified_split: forced arithmetic on a 50/50 dataset") {
    const auto ds = testutil::synthetic_dataset({{"a", 50}, {"b", 50}});
    for (std::uint64_t seed : {1ull, 42ull, 99ull}) {
        const auto [train, holdout] = stratified_split(ds, {0.2, seed, true});
        CHECK(holdout.size() == 20);
        CHECK(train.size() == 80);
        std::size_t a_count = 0;
        for (const auto& d : holdout.documents) a_count += d.label == "a" ? 1 : 0;
        CHECK(a_count == 10);
    }
}

TEST_CASE("stratified_split: determinism") {
    const auto ds = testutil::synthetic_dataset({{"a", 31}, {"b", 17}, {"c", 9}});
    const SplitSpec spec{0.25, 7, true};
    const auto [t1, h1] = stratified_split(ds, spec);
    const auto [t2, h2] = stratified_split(ds, spec);
    REQUIRE(h1.size() == h2.size());
    for (std::size_t i = 0; i < h1.size(); ++i) CHECK(h1.documents[i].id == h2.documents[i].id);
    // a different seed moves documents
    const auto [t3, h3] = stratified_split(ds, {0.25, 8, true});
    bool any_difference = h3.size() != h1.size();
    for (std::size_t i = 0; !any_difference && i < h1.size(); ++i) {
        any_difference = h1.documents[i].id != h3.documents[i].id;
    }
    CHECK(any_difference);
}

TEST_CASE("stratified_split: fraction out of range") {
    const auto ds = testutil::synthetic_dataset({{"a", 4}, {"b", 4}});
    CHECK_THROWS_AS(stratified_split(ds, {0.0, 42, true}), UsageError);
    CHECK_THROWS_AS(stratified_split(ds, {1.0, 42, true}), UsageError);
}

TEST_CASE("stratified_split: class with fewer than 2 members") {
    const auto ds = testutil::synthetic_dataset({{"a", 5}, {"b", 1}});
    CHECK_THROWS_AS(stratified_split(ds, {0.2, 42, true}), DataError);
}

TEST_CASE("stratified_split: partition property over random datasets") {
    std::mt19937_64 rng(90);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::pair<std::string, std::size_t>> spec;
        const int k = 2 + static_cast<int>(rng() % 4);
        for (int c = 0; c < k; ++c) {
            spec.emplace_back("c" + std::to_string(c), 2 + rng() % 40);
        }
        const auto ds = testutil::synthetic_dataset(spec);
        const double fraction = 0.1 + 0.01 * static_cast<double>(rng() % 40);
        const auto [train, holdout] = stratified_split(ds, {fraction, rng(), true});

        // multiset of ids is preserved
        std::multiset<std::string> before, after;
        for (const auto& d : ds.documents) before.insert(d.id);
        for (const auto& d : train.documents) after.insert(d.id);
        for (const auto& d : holdout.documents) after.insert(d.id);
        CHECK(before == after);

        const auto holdout_n =
            static_cast<std::size_t>(std::llround(fraction * static_cast<double>(ds.size())));
        CHECK(holdout.size() == holdout_n);

        // holdout distribution tracks the full distribution within 1/K per class
        if (holdout.size() >= 2 * spec.size()) {
            const auto full = class_distribution(ds);
            const auto held = class_distribution(holdout);
            for (std::size_t c = 0; c < full.size(); ++c) {
                CHECK(std::abs(full[c].second - held[c].second) <=
                      1.0 / static_cast<double>(spec.size()) + 1e-12);
            }
        }
    }
}

TEST_CASE("class_distribution mirrors the climate distribution") {
    const auto ds = testutil::synthetic_dataset(
        {{"Anti", 9}, {"Neutral", 18}, {"Pro", 52}, {"News", 21}});
    const auto dist = class_distribution(ds);
    REQUIRE(dist.size() == 4);
    CHECK(dist[0].second == doctest::Approx(0.09));
    CHECK(dist[1].second == doctest::Approx(0.18));
    CHECK(dist[2].second == doctest::Approx(0.52));
    CHECK(dist[3].second == doctest::Approx(0.21));
    double sum = 0.0;
    for (const auto& [label, f] : dist) sum += f;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("class_distribution: degenerate and error cases") {
    const auto single = testutil::synthetic_dataset({{"only", 5}});
    CHECK(class_distribution(single)[0].second == doctest::Approx(1.0));
    LabeledDataset empty;
    empty.schema = testutil::simple_schema({"a"});
    CHECK_THROWS_AS(class_distribution(empty), DataError);
}

TEST_CASE("csv round-trip preserves documents and labels") {
    TempDir dir;
    std::mt19937_64 rng(55);
    LabeledDataset ds;
    ds.schema = disaster_schema();
    const std::vector<std::string> tricky{
        "plain text",
        "commas, everywhere, really",
        "a \"quoted\" remark",
        "line\nbreak inside",
        "trailing space ",
        "unicode caf\xc3\xa9 \xf0\x9f\x98\x82",
        "semi;colon and\ttab",
    };
    for (std::size_t i = 0; i < 40; ++i) {
        Document d;
        d.id = std::to_string(i);
        d.text = tricky[i % tricky.size()] + " #" + std::to_string(rng() % 100);
        d.label = (rng() % 2 == 0) ? "disaster" : "not_disaster";
        d.keyword = i % 3 == 0 ? "storm" : "";
        d.location = i % 4 == 0 ? "CA, USA" : "";
        ds.documents.push_back(std::move(d));
    }

    save_csv(ds, dir.file("round.csv"));
    const auto back = load_csv(dir.file("round.csv"), ds.schema);
    REQUIRE(back.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(back.documents[i].id == ds.documents[i].id);
        CHECK(back.documents[i].text == ds.documents[i].text);
        CHECK(back.documents[i].label == ds.documents[i].label);
        CHECK(back.documents[i].keyword == ds.documents[i].keyword);
        CHECK(back.documents[i].location == ds.documents[i].location);
    }
}
