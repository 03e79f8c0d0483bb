#include "kfree/corpus.hpp"

#include "kfree/errors.hpp"

#include <fstream>
#include <sstream>

namespace kfree {

static std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

CorpusEntry parse_corpus_line(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream is(line);
    std::string tok;
    while (std::getline(is, tok, ';')) fields.push_back(strip(tok));
    if (fields.size() < 3)
        throw InvalidInput("corpus line needs 'name; d=...; coeffs=[...]': " + line);
    CorpusEntry e;
    e.name = fields[0];
    if (e.name.empty()) throw InvalidInput("corpus line without a name: " + line);
    std::string dm, cf;
    for (size_t i = 1; i < fields.size(); ++i) {
        const std::string& f = fields[i];
        if (f.rfind("d=", 0) == 0) dm = f;
        else if (f.rfind("coeffs=", 0) == 0) cf = f;
        else if (f.rfind("class=", 0) == 0) e.expected_class = f.substr(6);
        else if (f.rfind("r=", 0) == 0) e.expected_r = std::stoi(f.substr(2));
        else if (!f.empty())
            throw InvalidInput("corpus line has an unknown field '" + f + "'");
    }
    e.form = parse_form(dm + "; " + cf);
    return e;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open corpus file: " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        out.push_back(parse_corpus_line(line));
    }
    if (out.empty()) throw InvalidInput("corpus file is empty: " + path);
    return out;
}

} // namespace kfree
