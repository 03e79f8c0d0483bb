#ifndef KFREE_CORPUS_HPP
#define KFREE_CORPUS_HPP

#include "kfree/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kfree {

// One line of a corpus file: "name; d=3; coeffs=[1,0,0,1]; class=D1; r=2"
// (class and r optional; '#' starts a comment).
struct CorpusEntry {
    std::string name;
    BinaryForm form;
    std::optional<std::string> expected_class;
    std::optional<int> expected_r;
};

CorpusEntry parse_corpus_line(const std::string& line);
std::vector<CorpusEntry> load_corpus(const std::string& path);

} // namespace kfree

#endif
