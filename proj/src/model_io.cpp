#include "tcms/model_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "tcms/errors.hpp"
#include "tcms/numfmt.hpp"
#include "tcms/tcr_weighting.hpp"

namespace tcms {
namespace {

constexpr std::string_view kMagic = "TCMS";
constexpr std::string_view kVersion = "1";

std::vector<std::string> split_on(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(text.substr(start));
            return parts;
        }
        parts.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

[[noreturn]] void bad_row(std::size_t line_no, const std::string& what) {
    throw MalformedRow("line " + std::to_string(line_no) + ": " + what);
}

std::string snapshot_line(const PipelineConfig& p) {
    std::string stop;
    for (const std::string& w : p.stopwords) {
        if (!stop.empty()) stop += ',';
        stop += w;
    }
    std::string line;
    line += "lowercase=" + std::string(p.lowercase ? "1" : "0");
    line += " min_token_length=" + std::to_string(p.min_token_length);
    line += " drop_numeric=" + std::string(p.drop_numeric ? "1" : "0");
    line += " stemming=" + std::string(p.stemming_enabled ? "1" : "0");
    line += " min_df=" + std::to_string(p.min_doc_frequency);
    line += " stopwords=" + stop;
    return line;
}

bool parse_bool(const std::string& value, bool& out) {
    if (value == "1") out = true;
    else if (value == "0") out = false;
    else return false;
    return true;
}

PipelineConfig parse_snapshot(const std::string& line, std::size_t line_no) {
    PipelineConfig p;
    p.stopwords.clear();
    bool seen[6] = {};
    for (const std::string& pair : split_on(line, ' ')) {
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos)
            bad_row(line_no, "expected key=value, got '" + pair + "'");
        std::string key = pair.substr(0, eq);
        std::string value = pair.substr(eq + 1);
        long long n = 0;
        if (key == "lowercase" && parse_bool(value, p.lowercase)) {
            seen[0] = true;
        } else if (key == "min_token_length" && parse_int64(value, n) && n >= 1) {
            p.min_token_length = static_cast<int>(n);
            seen[1] = true;
        } else if (key == "drop_numeric" && parse_bool(value, p.drop_numeric)) {
            seen[2] = true;
        } else if (key == "stemming" && parse_bool(value, p.stemming_enabled)) {
            seen[3] = true;
        } else if (key == "min_df" && parse_int64(value, n) && n >= 1) {
            p.min_doc_frequency = n;
            seen[4] = true;
        } else if (key == "stopwords") {
            for (const std::string& w : split_on(value, ','))
                if (!w.empty()) p.stopwords.insert(w);
            seen[5] = true;
        } else {
            bad_row(line_no, "bad pipeline setting '" + pair + "'");
        }
    }
    for (bool s : seen)
        if (!s) bad_row(line_no, "incomplete pipeline snapshot");
    return p;
}

} // namespace

std::string serialize_model(const TrainedModel& model) {
    std::string out;
    out += kMagic;
    out += ' ';
    out += kVersion;
    out += '\n';
    for (std::size_t j = 0; j < model.class_names().size(); ++j) {
        if (j) out += '\t';
        out += model.class_names()[j];
    }
    out += '\n';
    out += snapshot_line(model.pipeline);
    out += '\n';
    out += "r=" + std::to_string(model.index.order) +
           " d=" + std::to_string(model.term_count()) + '\n';
    model.kb.tree.for_each([&](const WeightRecord& rec) {
        out += rec.term;
        for (double w : rec.weights) {
            out += '\t';
            out += format_double(w);
        }
        out += '\n';
    });
    return out;
}

TrainedModel parse_model(const std::string& text) {
    std::vector<std::string> lines = split_on(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw BadMagic("empty model file");

    // Line 1: magic + version.
    std::vector<std::string> head = split_on(lines[0], ' ');
    if (head.size() != 2 || head[0] != kMagic)
        throw BadMagic("expected '" + std::string(kMagic) +
                       " <version>' header, got '" + lines[0] + "'");
    if (head[1] != kVersion)
        throw VersionUnsupported("model format version '" + head[1] +
                                 "' not supported");
    if (lines.size() < 4) bad_row(lines.size(), "truncated model header");

    // Line 2: class names in canonical order.
    std::vector<std::string> class_names = split_on(lines[1], '\t');
    if (class_names.empty() || class_names.front().empty())
        bad_row(2, "no class names");
    for (std::size_t j = 1; j < class_names.size(); ++j)
        if (!(class_names[j - 1] < class_names[j]))
            bad_row(2, "class names not strictly sorted");

    // Line 3: pipeline snapshot.
    PipelineConfig pipeline = parse_snapshot(lines[2], 3);

    // Line 4: index order and term count.
    std::vector<std::string> dims = split_on(lines[3], ' ');
    long long order = 0, declared = 0;
    if (dims.size() != 2 || dims[0].rfind("r=", 0) != 0 ||
        dims[1].rfind("d=", 0) != 0 ||
        !parse_int64(std::string_view(dims[0]).substr(2), order) ||
        !parse_int64(std::string_view(dims[1]).substr(2), declared) ||
        order < 3 || declared < 0)
        bad_row(4, "expected 'r=<order> d=<terms>', got '" + lines[3] + "'");

    // Term rows.
    const std::size_t k = class_names.size();
    std::size_t rows = lines.size() - 4;
    if (rows != static_cast<std::size_t>(declared))
        throw ChecksumOfCountsMismatch(
            "declared d=" + std::to_string(declared) + " but file has " +
            std::to_string(rows) + " term rows");

    WeightMatrix matrix;
    matrix.class_count = static_cast<int>(k);
    matrix.records.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t line_no = i + 5;
        std::vector<std::string> cols = split_on(lines[i + 4], '\t');
        if (cols.size() != k + 1)
            bad_row(line_no, "expected term plus " + std::to_string(k) +
                                 " weights, got " + std::to_string(cols.size()) +
                                 " columns");
        if (cols[0].empty()) bad_row(line_no, "empty term");
        if (!matrix.records.empty() && !(matrix.records.back().term < cols[0]))
            bad_row(line_no, "terms not strictly sorted at '" + cols[0] + "'");
        WeightRecord rec;
        rec.term = cols[0];
        rec.weights.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            double w = 0;
            if (!parse_double(cols[j + 1], w) || !(w >= 0.0 && w <= 1.0))
                bad_row(line_no, "weight " + std::to_string(j + 1) +
                                     " not a finite value in [0,1]: '" +
                                     cols[j + 1] + "'");
            rec.weights[j] = w;
        }
        matrix.records.push_back(std::move(rec));
    }

    IndexConfig index{static_cast<int>(order)};
    return TrainedModel{std::move(pipeline), index,
                        KnowledgeBase::build(matrix, index,
                                             std::move(class_names))};
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open model file for writing: " + path.string());
    std::string text = serialize_model(model);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("failed writing model file: " + path.string());
}

TrainedModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model(buffer.str());
}

} // namespace tcms
