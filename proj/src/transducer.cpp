/* transducer.cpp */

#include "gfgaut/transducer.hpp"

#include "gfgaut/parity_game.hpp"

namespace gfgaut {

Token Token::make_letter(LetterId a) {
    Token t;
    t.kind = Kind::Letter;
    t.letter = a;
    return t;
}

Token Token::make_state(StateId q) {
    Token t;
    t.kind = Kind::State;
    t.state = q;
    return t;
}

Token Token::make_clause(Clause c) {
    Token t;
    t.kind = Kind::Clause;
    t.clause = std::move(c);
    return t;
}

Token Token::make_letter_clause(LetterId a, Clause c) {
    Token t;
    t.kind = Kind::LetterClause;
    t.letter = a;
    t.clause = std::move(c);
    return t;
}

int Token::compare(const Token& a, const Token& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.letter != b.letter) return a.letter < b.letter ? -1 : 1;
    if (a.state != b.state) return a.state < b.state ? -1 : 1;
    if (a.clause != b.clause) return a.clause < b.clause ? -1 : 1;
    return 0;
}

std::string Token::to_string(const std::vector<std::string>& letters,
                             const std::vector<std::string>& states) const {
    auto state_name = [&](StateId q) {
        return q < states.size() ? states[q] : "?" + std::to_string(q);
    };
    auto clause_str = [&](const Clause& c) {
        std::string s = "{";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += " ";
            s += state_name(c[i]);
        }
        return s + "}";
    };
    switch (kind) {
    case Kind::Epsilon: return "epsilon";
    case Kind::Letter:
        return "letter:" + (letter < letters.size() ? letters[letter] : "?");
    case Kind::State: return "state:" + state_name(state);
    case Kind::Clause: return "clause:" + clause_str(clause);
    case Kind::LetterClause:
        return "letter:" + (letter < letters.size() ? letters[letter] : "?") +
               ",clause:" + clause_str(clause);
    }
    return "?";
}

MemoryId Transducer::add_memory(std::string mname, Token out) {
    memory_names.push_back(std::move(mname));
    output.push_back(std::move(out));
    return (MemoryId)(output.size() - 1);
}

void Transducer::set_step(MemoryId m, Token t, MemoryId to) {
    step[{m, std::move(t)}] = to;
}

std::optional<MemoryId> Transducer::next(MemoryId m, const Token& t) const {
    auto it = step.find({m, t});
    if (it != step.end()) return it->second;
    if (absorbing) return m;
    return std::nullopt;
}

MemoryId Transducer::next_or_throw(MemoryId m, const Token& t) const {
    auto n = next(m, t);
    if (!n) throw Error("transducer I/O shape mismatch: no step from memory " +
                        (m < memory_names.size() ? memory_names[m] : std::to_string(m)));
    return *n;
}

Transducer Transducer::trivial(std::string name) {
    Transducer t;
    t.name = std::move(name);
    t.add_memory("m0", Token::epsilon());
    t.absorbing = true;
    return t;
}

Transducer strategy_to_transducer(
    const ParityGame& g, const PositionalStrategy& s,
    const std::function<Token(uint32_t from, uint32_t to)>& input_proj,
    const std::function<Token(uint32_t v, int64_t choice)>& output_proj) {
    if (!g.root) throw Error("strategy_to_transducer needs a rooted game");
    Transducer t;
    t.name = "strategy";
    std::vector<int64_t> mem_of(g.size(), -1);
    std::vector<uint32_t> work;
    auto intern = [&](uint32_t v) {
        if (mem_of[v] >= 0) return (MemoryId)mem_of[v];
        MemoryId m = t.add_memory(g.vnames[v], output_proj(v, s.choice[v]));
        mem_of[v] = m;
        work.push_back(v);
        return m;
    };
    t.initial = intern(*g.root);
    while (!work.empty()) {
        uint32_t v = work.back();
        work.pop_back();
        MemoryId m = (MemoryId)mem_of[v];
        std::vector<uint32_t> targets;
        if (g.owned_by(v, s.owner)) {
            if (s.choice[v] < 0)
                throw Error("strategy undefined at reachable vertex " + g.vnames[v]);
            targets.push_back((uint32_t)s.choice[v]);
        } else {
            targets.assign(g.succ[v].begin(), g.succ[v].end());
        }
        for (uint32_t u : targets) {
            Token tok = input_proj(v, u);
            auto existing = t.next(m, tok);
            MemoryId tm = intern(u);
            if (existing && *existing != tm)
                throw Error("ambiguous projection: two successors of " + g.vnames[v] +
                            " share an input token");
            t.set_step(m, std::move(tok), tm);
        }
    }
    return t;
}

} // namespace gfgaut
