#include "capelli/parse.hpp"

#include <algorithm>

namespace capelli {

std::vector<std::string> identifiers(std::string_view text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (std::isdigit(c)) {
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name(text.substr(start, pos - start));
            if (name != "i" && std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
            continue;
        }
        ++pos;
    }
    return out;
}

Coefficient parse_coefficient(std::string_view text) {
    return parse_element<Coefficient>(text, Coefficient(), nullptr);
}

namespace {

bool is_derivative_name(const std::string& name) {
    return name.size() >= 2 && name[0] == 'd' && std::isalpha(static_cast<unsigned char>(name[1]));
}

} // namespace

GeneratorSetPtr weyl_generators_for(std::string_view text) {
    std::vector<std::string> names;
    for (auto& id : identifiers(text)) {
        if (param::lookup(id)) continue;
        std::string base = is_derivative_name(id) ? id.substr(1) : id;
        if (std::find(names.begin(), names.end(), base) == names.end()) names.push_back(base);
    }
    std::sort(names.begin(), names.end());
    return GeneratorSet::make(names);
}

std::function<std::optional<WeylElement>(const std::string&)> weyl_atom(const GeneratorSetPtr& gs) {
    return [gs](const std::string& name) -> std::optional<WeylElement> {
        if (param::lookup(name)) return std::nullopt;
        if (gs->find(name) >= 0) return WeylElement::variable(gs, name);
        if (is_derivative_name(name) && gs->find(name.substr(1)) >= 0)
            return WeylElement::derivative(gs, name.substr(1));
        return std::nullopt;
    };
}

WeylElement parse_weyl(std::string_view text, const GeneratorSetPtr& gs) {
    return parse_element(text, WeylElement(gs), weyl_atom(gs));
}

WeylElement parse_weyl(std::string_view text) { return parse_weyl(text, weyl_generators_for(text)); }

std::function<std::optional<PbwElement>(const std::string&)> pbw_atom(const PbwAlgebraPtr& alg) {
    return [alg](const std::string& name) -> std::optional<PbwElement> {
        if (alg->spec().find(name) < 0) return std::nullopt;
        return PbwElement::generator(alg, name);
    };
}

PbwElement parse_pbw(std::string_view text, const PbwAlgebraPtr& alg) {
    return parse_element(text, PbwElement(alg), pbw_atom(alg));
}

std::function<std::optional<SwapElement>(const std::string&)> swap_atom(const SwapTablePtr& table) {
    return [table](const std::string& name) -> std::optional<SwapElement> {
        if (table->find(name) < 0) return std::nullopt;
        return SwapElement::letter(table, name);
    };
}

SwapElement parse_swap(std::string_view text, const SwapTablePtr& table) {
    return parse_element(text, SwapElement(table), swap_atom(table));
}

} // namespace capelli
