// Copyright the tweetkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.

#include "tweetkit/corpus/csv.hpp"

#include "tweetkit/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tweetkit::corpus {

namespace {

bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        const auto b = static_cast<unsigned char>(s[i]);
        std::size_t len;
        unsigned min_cp;
        if (b < 0x80) {
            ++i;
            continue;
        } else if ((b & 0xE0) == 0xC0) {
            len = 2;
            min_cp = 0x80;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            min_cp = 0x800;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            min_cp = 0x10000;
        } else {
            return false;
        }
        if (i + len > n) return false;
        unsigned cp = b & (0xFFu >> (len + 1));
        for (std::size_t k = 1; k < len; ++k) {
            const auto c = static_cast<unsigned char>(s[i + k]);
            if ((c & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (c & 0x3Fu);
        }
        if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
        i += len;
    }
    return true;
}

std::string latin1_to_utf8(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        const auto b = static_cast<unsigned char>(ch);
        if (b < 0x80) {
            out.push_back(ch);
        } else {
            out.push_back(static_cast<char>(0xC0 | (b >> 6)));
            out.push_back(static_cast<char>(0x80 | (b & 0x3F)));
        }
    }
    return out;
}

bool blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

} // namespace

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false; // current record has content

    std::size_t i = 0;
    const std::size_t n = text.size();
    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
        field_started = false;
    };

    while (i < n) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field.push_back(c);
                ++i;
            }
            continue;
        }
        switch (c) {
        case '"':
            // Opens a quoted section; quotes inside an unquoted field are kept verbatim.
            if (field.empty()) {
                in_quotes = true;
            } else {
                field.push_back(c);
            }
            field_started = true;
            ++i;
            break;
        case ',':
            end_field();
            field_started = true;
            ++i;
            break;
        case '\r':
            if (i + 1 < n && text[i + 1] == '\n') ++i;
            [[fallthrough]];
        case '\n':
            end_record();
            ++i;
            break;
        default:
            field.push_back(c);
            field_started = true;
            ++i;
            break;
        }
    }
    if (in_quotes) throw DataError("csv: unbalanced quote at end of file");
    if (field_started || !field.empty() || !record.empty()) end_record();
    return records;
}

std::string LoadReport::to_text() const {
    std::ostringstream os;
    os << "file: " << path << "\n"
       << "encoding: " << encoding << "\n"
       << "rows seen: " << rows_seen << "\n"
       << "rows loaded: " << rows_loaded << "\n"
       << "rows rejected: " << rejected.size() << "\n";
    for (const auto& [record, reason] : rejected) {
        os << "  record " << record << ": " << reason << "\n";
    }
    return os.str();
}

LabeledDataset load_csv(const std::filesystem::path& path, const LabelSchema& schema,
                        LoadReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("csv: cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    LoadReport local;
    LoadReport& rep = report != nullptr ? *report : local;
    rep = LoadReport{};
    rep.path = path.string();

    if (bytes.size() >= 3 && bytes.compare(0, 3, "\xEF\xBB\xBF") == 0) bytes.erase(0, 3);
    if (valid_utf8(bytes)) {
        rep.encoding = "utf-8";
    } else {
        bytes = latin1_to_utf8(bytes);
        rep.encoding = "latin-1";
    }

    const auto records = parse_csv(bytes);
    if (records.empty()) throw DataError("csv: " + path.string() + " is empty");

    const std::vector<std::string>& header = records.front();
    std::unordered_map<std::string, std::size_t> column_pos;
    for (std::size_t j = 0; j < header.size(); ++j) column_pos.emplace(header[j], j);

    // Resolve the schema's columns; every mapped column must exist.
    std::vector<std::pair<std::size_t, std::string>> mapped; // (csv index, field)
    for (const auto& [column, field] : schema.column_map) {
        auto it = column_pos.find(column);
        if (it == column_pos.end()) {
            throw DataError("csv: " + path.string() + " is missing required column \"" + column +
                            "\"");
        }
        mapped.emplace_back(it->second, field);
    }

    const bool labeled = !schema.labels.empty();
    LabeledDataset out;
    out.schema = schema;
    std::unordered_set<std::string> seen_ids;

    for (std::size_t r = 1; r < records.size(); ++r) {
        const std::size_t record_no = r + 1;
        const auto& row = records[r];
        ++rep.rows_seen;
        if (row.size() != header.size()) {
            rep.rejected.emplace_back(record_no,
                                      "expected " + std::to_string(header.size()) + " fields, got " +
                                          std::to_string(row.size()));
            continue;
        }

        Document doc;
        for (const auto& [pos, field] : mapped) {
            const std::string& value = row[pos];
            if (field == "id") doc.id = value;
            else if (field == "text") doc.text = value;
            else if (field == "label") doc.label = value;
            else if (field == "location") doc.location = value;
            else if (field == "keyword") doc.keyword = value;
            else if (field == "date") doc.date = value;
        }

        if (blank(doc.text)) {
            rep.rejected.emplace_back(record_no, "empty text");
            continue;
        }
        if (labeled) {
            if (!schema.label_decoder.empty()) {
                auto it = schema.label_decoder.find(doc.label);
                if (it == schema.label_decoder.end()) {
                    rep.rejected.emplace_back(record_no, "undecodable label \"" + doc.label + "\"");
                    continue;
                }
                doc.label = it->second;
            } else if (!schema.has_label(doc.label)) {
                rep.rejected.emplace_back(record_no, "unknown label \"" + doc.label + "\"");
                continue;
            }
        } else {
            doc.label.clear();
        }
        if (!doc.id.empty() && !seen_ids.insert(doc.id).second) {
            rep.rejected.emplace_back(record_no, "duplicate id \"" + doc.id + "\"");
            continue;
        }

        out.documents.push_back(std::move(doc));
        ++rep.rows_loaded;
    }

    if (out.documents.empty()) {
        throw DataError("csv: " + path.string() + " produced zero valid rows");
    }
    return out;
}

void save_csv(const LabeledDataset& dataset, const std::filesystem::path& path) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw DataError("csv: cannot write " + path.string());

    // Encode labels back to raw values through the inverse decoder.
    std::unordered_map<std::string, std::string> encoder;
    for (const auto& [raw, label] : dataset.schema.label_decoder) {
        encoder.emplace(label, raw); // first raw value wins
    }

    std::string line;
    for (std::size_t j = 0; j < dataset.schema.column_map.size(); ++j) {
        if (j > 0) outf << ',';
        outf << csv_quote(dataset.schema.column_map[j].first);
    }
    outf << '\n';

    for (const Document& doc : dataset.documents) {
        for (std::size_t j = 0; j < dataset.schema.column_map.size(); ++j) {
            const std::string& field = dataset.schema.column_map[j].second;
            std::string value;
            if (field == "id") value = doc.id;
            else if (field == "text") value = doc.text;
            else if (field == "label") {
                auto it = encoder.find(doc.label);
                value = it != encoder.end() ? it->second : doc.label;
            } else if (field == "location") value = doc.location;
            else if (field == "keyword") value = doc.keyword;
            else if (field == "date") value = doc.date;
            if (j > 0) outf << ',';
            outf << csv_quote(value);
        }
        outf << '\n';
    }
}

} // namespace tweetkit::corpus
