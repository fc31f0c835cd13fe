#include "levrecon/json_io.hpp"

#include "levrecon/error.hpp"

namespace levrecon {

using nlohmann::json;

json big_to_json(const BigInt& v) {
    if (v >= 0) {
        if (auto u = to_u64(v)) return *u;
    } else if (v >= BigInt(std::numeric_limits<std::int64_t>::min())) {
        return static_cast<std::int64_t>(v);
    }
    return to_string(v);
}

json pattern_to_json(const ErrorPattern& p, Alphabet alphabet) {
    json ins = json::array();
    for (const auto& part : p.ins.parts()) ins.push_back(Word(part, alphabet).to_string());
    json sub = json::object();
    for (const auto& [pos, s] : p.sub.entries()) sub[std::to_string(pos)] = s;
    return json{{"ins", ins}, {"del", p.del.to_string()}, {"sub", sub}};
}

ErrorPattern pattern_from_json(const json& j, Alphabet alphabet) {
    try {
        std::vector<std::vector<Symbol>> parts;
        for (const auto& part : j.at("ins")) {
            const Word w = Word::parse(part.get<std::string>(), alphabet);
            parts.emplace_back(w.symbols().begin(), w.symbols().end());
        }
        std::map<std::size_t, Symbol> sub;
        for (const auto& [pos, s] : j.at("sub").items()) {
            const auto sym = s.get<Symbol>();
            if (!alphabet.contains(sym)) throw ParseError("substituted symbol outside alphabet");
            sub[std::stoul(pos)] = sym;
        }
        return ErrorPattern{InsertionVector(std::move(parts)), DeletionVector::parse(j.at("del").get<std::string>()),
                            SubstitutionPattern(std::move(sub))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed error pattern: ") + e.what());
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        throw ParseError(std::string("malformed error pattern: ") + e.what());
    }
}

json collection_to_json(const OutputCollection& c) {
    json items = json::array();
    for (const auto& [w, count] : c.items()) items.push_back({{"word", w.to_string()}, {"count", count}});
    return json{{"kind", c.kind() == CollectionKind::Multiset ? "multiset" : "set"}, {"items", items}};
}

OutputCollection collection_from_json(const json& j, Alphabet alphabet) {
    try {
        const auto kind = j.at("kind").get<std::string>();
        if (kind != "set" && kind != "multiset") throw ParseError("unknown collection kind: " + kind);
        OutputCollection c(kind == "multiset" ? CollectionKind::Multiset : CollectionKind::Set);
        for (const auto& item : j.at("items"))
            c.add(Word::parse(item.at("word").get<std::string>(), alphabet), item.value("count", std::uint64_t{1}));
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed collection: ") + e.what());
    }
}

json report_to_json(const oracle::ConfusabilityReport& r) {
    json j{{"x", r.x.to_string()},
           {"xp", r.xp.to_string()},
           {"model", std::string(to_string(r.model))},
           {"type", std::string(to_string(r.type))},
           {"t", r.t},
           {"mode", std::string(to_string(r.mode))},
           {"n_max_confusable", r.n_max_confusable},
           {"channels_to_distinguish", r.n_max_confusable + 1}};
    if (r.witness) {
        json on_x = json::array(), on_xp = json::array();
        for (const auto& p : r.witness->on_x) on_x.push_back(pattern_to_json(p, r.x.alphabet()));
        for (const auto& p : r.witness->on_xp) on_xp.push_back(pattern_to_json(p, r.xp.alphabet()));
        j["witness"] = {{"on_x", on_x}, {"on_xp", on_xp}, {"outputs", collection_to_json(r.witness->outputs)}};
    }
    return j;
}

json certificate_to_json(const Y6Certificate& c) {
    json words = json::array();
    for (const auto& w : c.words) words.push_back(w.to_string());
    return json{{"i1", c.i1}, {"i2", c.i2}, {"i3", c.i3}, {"words", words}};
}

json sim_result_to_json(const SimResult& r) {
    json hist = json::object();
    for (const auto& [reads, count] : r.histogram) hist[std::to_string(reads)] = count;
    const auto& s = r.spec;
    return json{{"q", s.q},
                {"n", s.n},
                {"ts", s.budgets.substitutions},
                {"td", s.budgets.deletions},
                {"ti", s.budgets.insertions},
                {"samples", s.samples},
                {"seed", s.seed},
                {"max_reads", s.max_reads},
                {"average", r.average},
                {"median", r.median},
                {"halted", r.halted},
                {"failures", r.failures},
                {"wrong_decodes", r.wrong_decodes},
                {"halting_hypothesis", r.halting_hypothesis},
                {"histogram", hist}};
}

}  // namespace levrecon
