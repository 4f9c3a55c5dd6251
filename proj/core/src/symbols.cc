#include "relplan/symbols.h"

namespace relplan {

SymbolId SymbolTable::intern(std::string_view s) {
    auto it = ids_.find(std::string(s));
    if (it != ids_.end())
        return it->second;
    SymbolId id = static_cast<SymbolId>(names_.size());
    names_.emplace_back(s);
    ids_.emplace(names_.back(), id);
    return id;
}

} // namespace relplan
