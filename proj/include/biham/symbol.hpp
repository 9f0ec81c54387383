#pragma once

#include <memory>
#include <string>
#include <vector>

#include "biham/error.hpp"

namespace biham {

enum class SymKind {
    coordinate, // order-0 dependent variable of some chart
    parameter,  // constant of the problem (a_i, d, ...)
    spectral,   // the pencil parameter; at most one per context
};

struct Symbol {
    std::string name;
    SymKind kind;
};

// Registry of commuting scalar symbols. Frozen after construction; every
// polynomial/rational value carries a shared pointer to its context and the
// monomial exponent vectors are indexed by symbol id (registration order,
// which also fixes the monomial order).
class Context {
public:
    static std::shared_ptr<const Context> create(std::vector<Symbol> symbols) {
        auto ctx = std::shared_ptr<Context>(new Context());
        for (auto& s : symbols) ctx->add(std::move(s));
        return ctx;
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    const Symbol& symbol(int id) const { return symbols_.at(static_cast<size_t>(id)); }
    const std::string& name(int id) const { return symbol(id).name; }

    int find(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (symbols_[static_cast<size_t>(i)].name == name) return i;
        return -1;
    }

    int require(const std::string& name) const {
        int id = find(name);
        if (id < 0) throw Error("unknown symbol '" + name + "'");
        return id;
    }

    // id of the spectral symbol, or -1.
    int spectral() const { return spectral_; }

private:
    Context() = default;

    void add(Symbol s) {
        if (find(s.name) >= 0) throw Error("duplicate symbol '" + s.name + "'");
        if (s.kind == SymKind::spectral) {
            if (spectral_ >= 0) throw Error("context already has a spectral symbol");
            spectral_ = size();
        }
        symbols_.push_back(std::move(s));
    }

    std::vector<Symbol> symbols_;
    int spectral_ = -1;
};

using ContextPtr = std::shared_ptr<const Context>;

} // namespace biham
