#ifndef RELPLAN_SYMBOLS_H
#define RELPLAN_SYMBOLS_H

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relplan {

using SymbolId = int;

// Interns lower-cased symbol strings to dense integer ids. Ids are assigned
// in first-mention order, which makes every structure built on top of the
// table deterministic for a fixed input.
class SymbolTable {
public:
    SymbolId intern(std::string_view s);
    const std::string &name(SymbolId id) const { return names_.at(id); }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> ids_;
};

} // namespace relplan

#endif
