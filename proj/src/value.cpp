#include "sob/value.hpp"

#include <sstream>

namespace sob {

bool value_equal(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    if (auto la = std::get_if<std::shared_ptr<const ListV>>(&a)) {
        const auto& lb = std::get<std::shared_ptr<const ListV>>(b);
        const auto& ea = (*la)->elems;
        const auto& eb = lb->elems;
        if (ea.size() != eb.size()) return false;
        for (std::size_t i = 0; i < ea.size(); ++i)
            if (!value_equal(ea[i], eb[i])) return false;
        return true;
    }
    return a == b;
}

std::string value_text(const Value& v) {
    struct Printer {
        std::string operator()(NullV) const { return "null"; }
        std::string operator()(VoidV) const { return "void"; }
        std::string operator()(ErrorV) const { return "error"; }
        std::string operator()(std::int64_t n) const { return std::to_string(n); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return "\"" + s + "\""; }
        std::string operator()(const ObjectId& o) const { return o.text(); }
        std::string operator()(const FutureId& f) const { return f.text(); }
        std::string operator()(const std::shared_ptr<const ListV>& l) const {
            std::ostringstream out;
            out << "[";
            for (std::size_t i = 0; i < l->elems.size(); ++i) {
                if (i) out << ", ";
                out << value_text(l->elems[i]);
            }
            out << "]";
            return out.str();
        }
    };
    return std::visit(Printer{}, v);
}

} // namespace sob
