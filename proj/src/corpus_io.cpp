#include "tcms/corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tcms/errors.hpp"

namespace fs = std::filesystem;

namespace tcms {

// Defined in stopwords_default.cpp.
extern const char* const kDefaultStopwordText;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string lowercase_ascii(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

void add_stopword_line(std::string line, std::set<std::string>& out) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') return;
    // One token per line; tolerate stray separators.
    std::string current;
    auto flush = [&] {
        if (!current.empty()) out.insert(lowercase_ascii(current));
        current.clear();
    };
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == ',') flush();
        else current.push_back(c);
    }
    flush();
}

} // namespace

CorpusLoadResult load_corpus_dir(const fs::path& path,
                                 const PipelineConfig& config) {
    if (!fs::is_directory(path))
        throw NoClassesFound("not a directory: " + path.string());

    std::vector<fs::path> class_dirs;
    for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_directory()) class_dirs.push_back(entry.path());
    }
    std::sort(class_dirs.begin(), class_dirs.end());

    CorpusLoadResult result;
    std::vector<RawDocument> raw;
    for (const fs::path& class_dir : class_dirs) {
        const std::string label = class_dir.filename().string();
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(class_dir)) {
            if (entry.is_directory()) {
                result.warnings.push_back("ignored nested directory: " +
                                          entry.path().string());
                continue;
            }
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            result.warnings.push_back("class '" + label +
                                      "' has no documents, dropped");
            continue;
        }
        for (const fs::path& file : files)
            raw.push_back(RawDocument{label + "/" + file.filename().string(),
                                      label, read_file(file)});
    }
    if (raw.empty())
        throw NoClassesFound("no class directories with documents under: " +
                             path.string());
    result.corpus = build_corpus(raw, config);
    return result;
}

CorpusLoadResult load_corpus_jsonl(const fs::path& path,
                                   const PipelineConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path.string());

    CorpusLoadResult result;
    std::vector<RawDocument> raw;
    std::string line;
    std::int64_t line_no = 0, considered = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++considered;
        nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) {
            result.warnings.push_back("line " + std::to_string(line_no) +
                                      ": not a JSON object, skipped");
            ++result.skipped_lines;
            continue;
        }
        const char* missing = nullptr;
        if (!doc.contains("label") || !doc["label"].is_string())
            missing = "label";
        else if (!doc.contains("text") || !doc["text"].is_string())
            missing = "text";
        if (missing) {
            result.warnings.push_back("line " + std::to_string(line_no) +
                                      ": missing string field '" +
                                      std::string(missing) + "', skipped");
            ++result.skipped_lines;
            continue;
        }
        raw.push_back(RawDocument{"line" + std::to_string(line_no),
                                  doc["label"].get<std::string>(),
                                  doc["text"].get<std::string>()});
    }
    if (considered > 0 &&
        static_cast<double>(result.skipped_lines) >
            0.01 * static_cast<double>(considered))
        throw TooManyMalformedLines(
            std::to_string(result.skipped_lines) + " of " +
            std::to_string(considered) + " lines malformed in " +
            path.string());
    if (raw.empty())
        throw NoClassesFound("no documents in: " + path.string());
    result.corpus = build_corpus(raw, config);
    return result;
}

std::set<std::string> load_stopword_file(const fs::path& path) {
    std::string text = read_file(path);
    std::set<std::string> words;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) add_stopword_line(std::move(line), words);
    return words;
}

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = [] {
        std::set<std::string> out;
        std::istringstream lines(kDefaultStopwordText);
        std::string line;
        while (std::getline(lines, line)) add_stopword_line(std::move(line), out);
        return out;
    }();
    return words;
}

} // namespace tcms
