#pragma once

#include <memory>
#include <string>
#include <vector>

#include "thomas/poly.hpp"

namespace thomas {

// Declared block ranking, highest block first; entries are indeterminate indices.
struct RankingDecl {
    std::vector<std::vector<int>> blocks;
    bool empty() const { return blocks.empty(); }
};

struct SystemFile {
    std::shared_ptr<Context> ctx;
    RankingDecl ranking; // empty when the file declares none
    std::vector<Poly> equations;
    std::vector<Poly> inequations;
};

// shared expression grammar: + - * ^, rational literals p/q, parentheses,
// identifiers, derivatives name[j1,...,jn]
Poly parse_poly(const std::string& text, Context& ctx);

SystemFile parse_system_text(const std::string& text);
SystemFile parse_system_file(const std::string& path);

} // namespace thomas
