/* format.cpp -- parsing and rendering of the text formats */

#include "gfgaut/format.hpp"

#include <algorithm>
#include <sstream>

namespace gfgaut {

namespace {

struct Line {
    size_t number;
    std::string text;
};

std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r");
        out.push_back({no, raw.substr(b, e - b + 1)});
    }
    return out;
}

bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-' || c == '\'';
}

struct Tokenizer {
    const std::string& s;
    size_t line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", line, pos + 1);
        ++pos;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && ident_char(s[pos])) ++pos;
        if (pos == start) throw ParseError("expected an identifier", line, pos + 1);
        return s.substr(start, pos - start);
    }
    int integer() {
        std::string t = ident();
        try {
            size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw ParseError("expected an integer, got '" + t + "'", line, pos);
        }
    }
};

} // namespace

namespace {

/// cond := term ('|' term)* ; term := atom ('&' atom)* ; atom := state | '(' cond ')'
Cond parse_cond(Tokenizer& tk, const Automaton& a) {
    std::function<Cond()> cond_rule;
    std::function<Cond()> atom_rule = [&]() -> Cond {
        if (tk.eat('(')) {
            Cond c = cond_rule();
            tk.expect(')');
            return c;
        }
        size_t at = tk.pos;
        std::string name = tk.ident();
        auto q = a.state_index(name);
        if (!q) throw ParseError("unknown state '" + name + "'", tk.line, at + 1);
        return Cond::leaf(*q);
    };
    std::function<Cond()> term_rule = [&]() -> Cond {
        std::vector<Cond> ops{atom_rule()};
        while (tk.eat('&')) ops.push_back(atom_rule());
        return ops.size() == 1 ? ops.front() : Cond::conj(std::move(ops));
    };
    cond_rule = [&]() -> Cond {
        std::vector<Cond> ops{term_rule()};
        while (tk.eat('|')) ops.push_back(term_rule());
        return ops.size() == 1 ? ops.front() : Cond::disj(std::move(ops));
    };
    return cond_rule();
}

std::vector<std::string> name_list(Tokenizer& tk) {
    std::vector<std::string> out;
    while (!tk.done()) out.push_back(tk.ident());
    return out;
}

} // namespace

Automaton parse_automaton(const std::string& text) {
    std::vector<Line> lines = logical_lines(text);
    if (lines.empty()) throw ParseError("empty automaton description", 1, 1);

    Automaton a;
    size_t i = 0;
    auto header = [&](const std::string& keyword) -> std::optional<Tokenizer> {
        if (i >= lines.size()) return std::nullopt;
        Tokenizer tk{lines[i].text, lines[i].number};
        size_t save = tk.pos;
        std::string word;
        try {
            word = tk.ident();
        } catch (...) {
            return std::nullopt;
        }
        if (word != keyword) return std::nullopt;
        (void)save;
        return tk;
    };

    {
        auto tk = header("automaton");
        if (!tk) throw ParseError("expected 'automaton <name>'", lines[0].number, 1);
        a.name = tk->ident();
        ++i;
    }
    {
        auto tk = header("alphabet");
        if (!tk) throw ParseError("expected 'alphabet:'", i < lines.size() ? lines[i].number : 0, 1);
        tk->expect(':');
        a.alphabet = name_list(*tk);
        if (a.alphabet.empty()) throw ParseError("empty alphabet", lines[i].number, 1);
        ++i;
    }
    {
        auto tk = header("states");
        if (!tk) throw ParseError("expected 'states:'", i < lines.size() ? lines[i].number : 0, 1);
        tk->expect(':');
        a.states = name_list(*tk);
        if (a.states.empty()) throw ParseError("empty state list", lines[i].number, 1);
        ++i;
    }
    for (size_t k = 0; k < a.states.size(); ++k)
        for (size_t j = k + 1; j < a.states.size(); ++j)
            if (a.states[k] == a.states[j])
                throw ParseError("duplicate state '" + a.states[k] + "'", lines[i - 1].number, 1);
    {
        auto tk = header("initial");
        if (!tk) throw ParseError("expected 'initial:'", i < lines.size() ? lines[i].number : 0, 1);
        tk->expect(':');
        std::string name = tk->ident();
        auto q = a.state_index(name);
        if (!q) throw ParseError("unknown initial state '" + name + "'", lines[i].number, 1);
        a.initial = *q;
        ++i;
    }
    {
        auto tk = header("acceptance");
        if (!tk)
            throw ParseError("expected 'acceptance:'", i < lines.size() ? lines[i].number : 0, 1);
        tk->expect(':');
        std::string kind = tk->ident();
        tk->expect('{');
        if (kind == "parity") {
            std::vector<int> prio(a.states.size(), -1);
            while (!tk->eat('}')) {
                std::string name = tk->ident();
                auto q = a.state_index(name);
                if (!q) throw ParseError("unknown state '" + name + "'", lines[i].number, 1);
                tk->expect(':');
                prio[*q] = tk->integer();
            }
            for (size_t q = 0; q < prio.size(); ++q)
                if (prio[q] < 0)
                    throw ParseError("parity map misses state '" + a.states[q] + "'",
                                     lines[i].number, 1);
            a.acceptance = Acceptance::parity(std::move(prio));
        } else if (kind == "labels") {
            std::vector<std::string> labels(a.states.size());
            std::vector<bool> got(a.states.size(), false);
            while (!tk->eat('}')) {
                std::string name = tk->ident();
                auto q = a.state_index(name);
                if (!q) throw ParseError("unknown state '" + name + "'", lines[i].number, 1);
                tk->expect(':');
                labels[*q] = tk->ident();
                got[*q] = true;
            }
            for (size_t q = 0; q < got.size(); ++q)
                if (!got[q])
                    throw ParseError("label map misses state '" + a.states[q] + "'",
                                     lines[i].number, 1);
            a.acceptance = Acceptance::state_labels(std::move(labels));
        } else {
            std::vector<StateId> set;
            while (!tk->eat('}')) {
                std::string name = tk->ident();
                auto q = a.state_index(name);
                if (!q) throw ParseError("unknown state '" + name + "'", lines[i].number, 1);
                set.push_back(*q);
            }
            if (kind == "buchi") a.acceptance = Acceptance::buchi(std::move(set));
            else if (kind == "cobuchi") a.acceptance = Acceptance::co_buchi(std::move(set));
            else if (kind == "weak") a.acceptance = Acceptance::weak(std::move(set));
            else if (kind == "finite") a.acceptance = Acceptance::finite_words(std::move(set));
            else
                throw ParseError("unknown acceptance kind '" + kind + "'", lines[i].number, 1);
        }
        ++i;
    }

    a.resize_delta();
    std::vector<bool> seen(a.num_states() * a.num_letters(), false);
    for (; i < lines.size(); ++i) {
        Tokenizer tk{lines[i].text, lines[i].number};
        std::string word = tk.ident();
        if (word != "delta")
            throw ParseError("expected a 'delta' line, got '" + word + "'", lines[i].number, 1);
        std::string sname = tk.ident();
        auto q = a.state_index(sname);
        if (!q) throw ParseError("unknown state '" + sname + "'", lines[i].number, 1);
        std::string lname = tk.ident();
        auto x = a.letter_index(lname);
        if (!x) throw ParseError("unknown letter '" + lname + "'", lines[i].number, 1);
        tk.expect('=');
        Cond c = parse_cond(tk, a);
        if (!tk.done()) throw ParseError("trailing input after condition", lines[i].number, tk.pos + 1);
        size_t idx = *q * a.num_letters() + *x;
        if (seen[idx])
            throw ParseError("duplicate delta line for " + sname + " " + lname, lines[i].number, 1);
        seen[idx] = true;
        a.set_cond(*q, *x, std::move(c));
    }
    for (StateId q = 0; q < a.num_states(); ++q)
        for (LetterId x = 0; x < a.num_letters(); ++x)
            if (!a.has_cond(q, x))
                throw ParseError("missing delta line for " + a.states[q] + " " + a.alphabet[x],
                                 lines.back().number, 1);
    return a;
}

std::string render_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "automaton " << (a.name.empty() ? "aut" : a.name) << "\n";
    out << "alphabet:";
    for (const auto& l : a.alphabet) out << " " << l;
    out << "\nstates:";
    for (const auto& s : a.states) out << " " << s;
    out << "\ninitial: " << a.states[a.initial] << "\n";
    out << "acceptance: ";
    switch (a.acceptance.kind) {
    case AccKind::Buchi: out << "buchi {"; break;
    case AccKind::CoBuchi: out << "cobuchi {"; break;
    case AccKind::Weak: out << "weak {"; break;
    case AccKind::FiniteWords: out << "finite {"; break;
    case AccKind::Parity: out << "parity {"; break;
    case AccKind::Labels: out << "labels {"; break;
    }
    if (a.acceptance.kind == AccKind::Parity) {
        for (StateId q = 0; q < a.num_states(); ++q)
            out << " " << a.states[q] << ":" << a.acceptance.priority[q];
    } else if (a.acceptance.kind == AccKind::Labels) {
        for (StateId q = 0; q < a.num_states(); ++q)
            out << " " << a.states[q] << ":" << a.acceptance.labels[q];
    } else {
        for (StateId q : a.acceptance.set) out << " " << a.states[q];
    }
    out << " }\n";
    for (StateId q = 0; q < a.num_states(); ++q)
        for (LetterId x = 0; x < a.num_letters(); ++x)
            out << "delta " << a.states[q] << " " << a.alphabet[x] << " = "
                << cond_to_string(a.cond(q, x), a.states) << "\n";
    return out.str();
}

namespace {

struct GraphLines {
    std::vector<std::string> names, labels;
    std::vector<bool> eve;
    std::vector<int> priority;
    std::vector<std::pair<std::string, std::string>> edges;
    std::optional<std::string> root;
};

GraphLines parse_graph(const std::string& text) {
    GraphLines g;
    for (const Line& ln : logical_lines(text)) {
        Tokenizer tk{ln.text, ln.number};
        std::string word = tk.ident();
        if (word == "vertex") {
            g.names.push_back(tk.ident());
            g.labels.emplace_back();
            g.eve.push_back(false);
            g.priority.push_back(0);
            bool owner_seen = false;
            while (!tk.done()) {
                std::string attr = tk.ident();
                tk.expect('=');
                if (attr == "owner") {
                    std::string v = tk.ident();
                    if (v != "E" && v != "A")
                        throw ParseError("owner must be E or A", ln.number, tk.pos);
                    g.eve.back() = v == "E";
                    owner_seen = true;
                } else if (attr == "label") {
                    g.labels.back() = tk.ident();
                } else if (attr == "priority") {
                    g.priority.back() = tk.integer();
                } else {
                    throw ParseError("unknown vertex attribute '" + attr + "'", ln.number, tk.pos);
                }
            }
            if (!owner_seen) throw ParseError("vertex needs owner=E|A", ln.number, 1);
        } else if (word == "edge") {
            std::string from = tk.ident();
            tk.expect('-');
            tk.expect('>');
            g.edges.push_back({from, tk.ident()});
        } else if (word == "root") {
            g.root = tk.ident();
        } else {
            throw ParseError("expected vertex/edge/root, got '" + word + "'", ln.number, 1);
        }
    }
    return g;
}

int64_t find_name(const std::vector<std::string>& names, const std::string& n) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return (int64_t)i;
    return -1;
}

} // namespace

Arena parse_arena(const std::string& text) {
    GraphLines g = parse_graph(text);
    Arena r;
    for (size_t i = 0; i < g.names.size(); ++i) r.add_vertex(g.names[i], g.labels[i], g.eve[i]);
    for (const auto& [from, to] : g.edges) {
        int64_t f = find_name(g.names, from), t = find_name(g.names, to);
        if (f < 0 || t < 0) throw ParseError("edge references an unknown vertex", 0, 0);
        r.add_edge((Vertex)f, (Vertex)t);
    }
    if (g.root) {
        int64_t rt = find_name(g.names, *g.root);
        if (rt < 0) throw ParseError("unknown root vertex", 0, 0);
        r.root = (Vertex)rt;
    }
    r.check();
    return r;
}

std::string render_arena(const Arena& r) {
    std::ostringstream out;
    std::vector<std::string> names;
    for (size_t v = 0; v < r.size(); ++v) names.push_back(sanitize_identifier(r.vnames[v]));
    names = unique_names(std::move(names));
    for (size_t v = 0; v < r.size(); ++v) {
        out << "vertex " << names[v] << " owner=" << (r.eve_owned[v] ? "E" : "A");
        if (!r.labels[v].empty()) out << " label=" << r.labels[v];
        out << "\n";
    }
    for (size_t v = 0; v < r.size(); ++v)
        for (Vertex u : r.succ[v]) out << "edge " << names[v] << " -> " << names[u] << "\n";
    if (r.root) out << "root " << names[*r.root] << "\n";
    return out.str();
}

ParityGame parse_parity_game(const std::string& text) {
    GraphLines g = parse_graph(text);
    ParityGame pg;
    pg.vnames = g.names;
    pg.eve_owned.assign(g.eve.begin(), g.eve.end());
    pg.priority = g.priority;
    pg.succ.resize(g.names.size());
    for (const auto& [from, to] : g.edges) {
        int64_t f = find_name(g.names, from), t = find_name(g.names, to);
        if (f < 0 || t < 0) throw ParseError("edge references an unknown vertex", 0, 0);
        pg.succ[(size_t)f].push_back((Vertex)t);
    }
    if (g.root) {
        int64_t rt = find_name(g.names, *g.root);
        if (rt < 0) throw ParseError("unknown root vertex", 0, 0);
        pg.root = (Vertex)rt;
    }
    pg.check();
    return pg;
}

std::string render_parity_game(const ParityGame& g) {
    std::ostringstream out;
    std::vector<std::string> names;
    for (size_t v = 0; v < g.size(); ++v) names.push_back(sanitize_identifier(g.vnames[v]));
    names = unique_names(std::move(names));
    for (size_t v = 0; v < g.size(); ++v)
        out << "vertex " << names[v] << " owner=" << (g.eve_owned[v] ? "E" : "A")
            << " priority=" << g.priority[v] << "\n";
    for (size_t v = 0; v < g.size(); ++v)
        for (Vertex u : g.succ[v]) out << "edge " << names[v] << " -> " << names[u] << "\n";
    if (g.root) out << "root " << names[*g.root] << "\n";
    return out.str();
}

ParsedWord parse_word(const std::string& text, const std::vector<std::string>& alphabet) {
    auto letter = [&](char c, size_t col) -> LetterId {
        std::string s(1, c);
        for (LetterId i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == s) return i;
        throw ParseError("'" + s + "' is not a letter of the alphabet", 1, col + 1);
    };
    ParsedWord w;
    size_t i = 0;
    while (i < text.size() && text[i] != '(') {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        w.prefix.push_back(letter(text[i], i));
        ++i;
    }
    if (i == text.size()) return w; // finite word
    ++i;                            // '('
    size_t period_start = i;
    while (i < text.size() && text[i] != ')') {
        w.period.push_back(letter(text[i], i));
        ++i;
    }
    if (w.period.empty()) throw ParseError("empty lasso period", 1, period_start + 1);
    if (i + 2 >= text.size() || text[i] != ')' || text[i + 1] != '^' || text[i + 2] != 'w')
        throw ParseError("lasso must end with ')^w'", 1, i + 1);
    if (i + 3 != text.size()) throw ParseError("trailing input after lasso", 1, i + 4);
    return w;
}

std::string render_lasso(const LassoWord& w, const std::vector<std::string>& alphabet) {
    std::string out;
    for (LetterId x : w.prefix) out += alphabet[x];
    out += "(";
    for (LetterId x : w.period) out += alphabet[x];
    out += ")^w";
    return out;
}

std::string render_finite_word(const std::vector<LetterId>& w,
                               const std::vector<std::string>& alphabet) {
    std::string out;
    for (LetterId x : w) out += alphabet[x];
    return out.empty() ? "<empty>" : out;
}

std::string render_transducer(const Transducer& t, const std::vector<std::string>& alphabet,
                              const std::vector<std::string>& states) {
    std::ostringstream out;
    out << "transducer " << (t.name.empty() ? "strategy" : t.name) << "\n";
    out << "memories: " << t.memory_count() << "\n";
    out << "initial: m" << t.initial << "\n";
    for (MemoryId m = 0; m < t.memory_count(); ++m)
        out << "output m" << m << " = " << t.output[m].to_string(alphabet, states) << "\n";
    for (const auto& [key, to] : t.step)
        out << "step m" << key.first << " " << key.second.to_string(alphabet, states) << " -> m"
            << to << "\n";
    if (t.absorbing) out << "absorbing: every other token keeps the memory\n";
    return out.str();
}

} // namespace gfgaut
