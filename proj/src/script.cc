// Copyright 2026 The QWCP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwcp/script.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "qwcp/errors.h"
#include "qwcp/walkops.h"

namespace qwcp {

bool operator==(const Script &a, const Script &b) {
    const bool graphs = a.graph == b.graph || (a.graph && b.graph && *a.graph == *b.graph);
    return graphs && a.network_path == b.network_path && a.walkers == b.walkers && a.inits == b.inits &&
           a.commands == b.commands;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::optional<double> to_double(std::string_view s) {
    double v = 0;
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char *const kGateNames[] = {"I", "X", "Y", "Z", "H", "S", "T"};

}  // namespace

Matrix parse_gate(std::string_view text) {
    Matrix named = named_gate(text);
    if (named.size() > 0) {
        return named;
    }
    if (text.size() < 3 || text.substr(0, 2) != "U[" || text.back() != ']') {
        throw PreconditionError("unknown gate '" + std::string(text) + "'");
    }
    auto columns = split(text.substr(2, text.size() - 3), ';');
    const auto n = static_cast<Eigen::Index>(columns.size());
    Matrix m(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        auto values = split(columns[c], ',');
        if (static_cast<Eigen::Index>(values.size()) != 2 * n) {
            throw PreconditionError("gate column " + std::to_string(c) + " needs " + std::to_string(2 * n) +
                                    " numbers (re,im per row)");
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            auto re = to_double(values[2 * r]);
            auto im = to_double(values[2 * r + 1]);
            if (!re || !im) {
                throw PreconditionError("malformed number in gate '" + std::string(text) + "'");
            }
            m(r, c) = Amplitude(*re, *im);
        }
    }
    require_unitary(m, "gate " + std::string(text));
    return m;
}

std::string format_gate(const Matrix &m) {
    for (const char *name : kGateNames) {
        if (same_matrix(named_gate(name), m)) {
            return name;
        }
    }
    std::string out = "U[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (c > 0) {
            out += ';';
        }
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r > 0) {
                out += ',';
            }
            out += fmt_double(m(r, c).real()) + "," + fmt_double(m(r, c).imag());
        }
    }
    return out + "]";
}

namespace {

struct Token {
    std::string key;
    std::string value;
    bool has_value = false;
    int column = 0;

    int value_column() const {
        return column + static_cast<int>(key.size()) + 1;
    }
};

class Parser {
   public:
    Parser(const ParseOptions &options) : options_(options) {}

    Script run(std::string_view text) {
        int line_no = 0;
        for (auto raw : split(text, '\n')) {
            ++line_no;
            line_ = line_no;
            std::string_view line = raw;
            if (auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            auto tokens = tokenize(line);
            if (tokens.empty()) {
                continue;
            }
            try {
                dispatch(tokens);
            } catch (const PreconditionError &e) {
                throw ParseError(e.what(), line_, tokens[0].column);
            }
        }
        if (!script_.graph) {
            throw ParseError("script declares no network", line_no, 1);
        }
        return std::move(script_);
    }

   private:
    const ParseOptions &options_;
    Script script_;
    int line_ = 0;
    std::optional<RegisterLayout> probe_;

    [[noreturn]] void fail(const std::string &message, int column) const {
        throw ParseError(message, line_, column);
    }

    static std::vector<Token> tokenize(std::string_view line) {
        std::vector<Token> out;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            if (i >= line.size()) {
                break;
            }
            size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            std::string_view word = line.substr(start, i - start);
            Token t;
            t.column = static_cast<int>(start) + 1;
            if (auto eq = word.find('='); eq != std::string_view::npos) {
                t.key = word.substr(0, eq);
                t.value = word.substr(eq + 1);
                t.has_value = true;
            } else {
                t.key = word;
            }
            out.push_back(std::move(t));
        }
        return out;
    }

    const NetworkGraph &graph() const {
        if (!script_.graph) {
            fail("`network` must come before commands that name nodes", 1);
        }
        return *script_.graph;
    }
    const RegisterLayout &probe() const {
        graph();
        return *probe_;
    }

    VertexId node(std::string_view label, int column) const {
        auto v = graph().find(label);
        if (!v) {
            fail("unknown node '" + std::string(label) + "'", column);
        }
        return *v;
    }

    int qubit(std::string_view ref, int column) const {
        auto dot = ref.rfind('.');
        if (dot == std::string_view::npos) {
            fail("data qubit '" + std::string(ref) + "' must be written node.name", column);
        }
        VertexId v = node(ref.substr(0, dot), column);
        int i = probe().find_data_index(v, ref.substr(dot + 1));
        if (i < 0) {
            fail("unknown data qubit '" + std::string(ref) + "'", column);
        }
        return i;
    }

    std::vector<int> qubits(const Token &t) const {
        std::vector<int> out;
        for (auto part : split(t.value, ',')) {
            out.push_back(qubit(part, t.value_column()));
        }
        return out;
    }

    std::vector<VertexId> nodes(const Token &t) const {
        std::vector<VertexId> out;
        for (auto part : split(t.value, ',')) {
            out.push_back(node(part, t.value_column()));
        }
        return out;
    }

    PathSpec path(const Token &t) const {
        PathSpec p{nodes(t)};
        try {
            validate_path(graph(), p);
        } catch (const PreconditionError &e) {
            fail(e.what(), t.value_column());
        }
        return p;
    }

    int integer(const Token &t) const {
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.value.data(), t.value.data() + t.value.size(), v);
        if (ec != std::errc() || ptr != t.value.data() + t.value.size() || t.value.empty()) {
            fail("expected an integer for '" + t.key + "'", t.value_column());
        }
        return v;
    }

    std::vector<int> integers(const Token &t) const {
        std::vector<int> out;
        for (auto part : split(t.value, ',')) {
            Token piece{t.key, std::string(part), true, t.column};
            out.push_back(integer(piece));
        }
        return out;
    }

    std::vector<bool> bits(const Token &t) const {
        std::vector<bool> out;
        for (char c : t.value) {
            if (c != '0' && c != '1') {
                fail("control string must consist of 0 and 1", t.value_column());
            }
            out.push_back(c == '1');
        }
        return out;
    }

    Matrix gate(const Token &t) const {
        try {
            return parse_gate(t.value);
        } catch (const PreconditionError &e) {
            fail(e.what(), t.value_column());
        }
    }

    int walker(const Token &t) const {
        int w = integer(t);
        if (!script_.walkers) {
            fail("declare `walkers` before low-level commands", t.column);
        }
        if (w < 0 || w >= *script_.walkers) {
            fail("walker " + std::to_string(w) + " exceeds the walker budget of " + std::to_string(*script_.walkers),
                 t.value_column());
        }
        return w;
    }

    // Key/value access for one command line.
    struct Args {
        const Parser &p;
        const std::vector<Token> &tokens;
        std::set<size_t> used;

        const Token *find(std::string_view key) {
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i].has_value && tokens[i].key == key && !used.count(i)) {
                    used.insert(i);
                    return &tokens[i];
                }
            }
            return nullptr;
        }
        bool has(std::string_view key) const {
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i].has_value && tokens[i].key == key && !used.count(i)) {
                    return true;
                }
            }
            return false;
        }
        const Token &need(std::string_view key) {
            const Token *t = find(key);
            if (!t) {
                p.fail("`" + tokens[0].key + "` requires " + std::string(key) + "=", tokens[0].column);
            }
            return *t;
        }
        void done() const {
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (!used.count(i)) {
                    p.fail("unexpected argument '" + tokens[i].key + "'", tokens[i].column);
                }
            }
        }
    };

    std::vector<ControlQubit> controls(Args &args) {
        std::vector<int> qs;
        const Token *c = args.find("controls");
        const Token *single = args.find("control");
        if (c && single) {
            fail("use either control= or controls=", single->column);
        }
        if (!c && !single) {
            fail("`" + args.tokens[0].key + "` requires control= or controls=", args.tokens[0].column);
        }
        qs = qubits(c ? *c : *single);
        std::vector<bool> pattern(qs.size(), true);
        if (const Token *s = args.find("string")) {
            pattern = bits(*s);
            if (pattern.size() != qs.size()) {
                fail("control string length must match the number of controls", s->value_column());
            }
        }
        std::vector<ControlQubit> out;
        for (size_t i = 0; i < qs.size(); ++i) {
            out.push_back({qs[i], pattern[i]});
        }
        return out;
    }

    CoinAction action(Args &args, const char *gate_key) {
        const Token *swap = args.find("swap");
        const Token *coins = args.find("coins");
        if (swap && !coins) {
            auto c = integers(*swap);
            if (c.size() != 2) {
                fail("swap= takes two coin values", swap->value_column());
            }
            return CoinSwap{c[0], c[1]};
        }
        if (coins && !swap) {
            return CoinUnitary{integers(*coins), gate(args.need(gate_key))};
        }
        fail("give exactly one of swap= or coins=", args.tokens[0].column);
    }

    void budget(const Command &command, int column) {
        int needed = walkers_needed(graph(), command);
        if (script_.walkers && needed > *script_.walkers) {
            fail("command needs " + std::to_string(needed) + " walkers; budget is " +
                     std::to_string(*script_.walkers),
                 column);
        }
    }

    void add(Command command, int column) {
        if (command.index() <= 5) {
            budget(command, column);
        }
        script_.commands.push_back({line_, std::move(command)});
    }

    NodeGate target_gate(const Token &targets, const Token &g) const {
        return NodeGate{qubits(targets), gate(g)};
    }

    void dispatch(const std::vector<Token> &tokens) {
        const std::string &cmd = tokens[0].key;
        const int col = tokens[0].column;
        if (tokens[0].has_value) {
            fail("expected a command word", col);
        }
        Args args{*this, tokens, {}};
        if (cmd == "network") {
            if (tokens.size() != 2 || tokens[1].has_value) {
                fail("usage: network FILE", col);
            }
            if (script_.graph) {
                fail("network declared twice", col);
            }
            script_.network_path = tokens[1].key;
            std::filesystem::path file = options_.network_override.empty()
                                             ? std::filesystem::path(options_.base_dir) / script_.network_path
                                             : std::filesystem::path(options_.network_override);
            if (std::filesystem::path(script_.network_path).is_absolute() && options_.network_override.empty()) {
                file = script_.network_path;
            }
            try {
                script_.graph = std::make_shared<const NetworkGraph>(load_network_file(file.string()));
            } catch (const ParseError &e) {
                fail(e.what(), tokens[1].column);
            } catch (const PreconditionError &e) {
                fail(std::string("network file: ") + e.what(), tokens[1].column);
            }
            probe_.emplace(script_.graph, 0);
            return;
        }
        if (cmd == "walkers") {
            if (tokens.size() != 2 || tokens[1].has_value) {
                fail("usage: walkers K", col);
            }
            Token t{"", tokens[1].key, true, tokens[1].column - 1};
            int k = integer(t);
            if (k < 1) {
                fail("walker budget must be at least 1", tokens[1].column);
            }
            if (!script_.commands.empty()) {
                fail("declare `walkers` before any command", col);
            }
            script_.walkers = k;
            return;
        }
        if (cmd == "init") {
            if (tokens.size() < 2) {
                fail("usage: init NODE.QUBIT=STATE ...", col);
            }
            for (size_t i = 1; i < tokens.size(); ++i) {
                const Token &t = tokens[i];
                if (!t.has_value) {
                    fail("expected NODE.QUBIT=STATE", t.column);
                }
                int q = qubit(t.key, t.column);
                script_.inits[q] = qubit_state(t);
            }
            return;
        }
        if (cmd == "remote_cu") {
            RemoteCuCommand c;
            c.request.controls = controls(args);
            const Token &target = args.need("target");
            c.path = path(args.need("path"));
            c.request.gate = target_gate(target, args.need("gate"));
            if (const Token *s = args.find("separation")) {
                if (s->value == "reverse") {
                    c.separation = Separation::Reverse;
                } else if (s->value == "measure") {
                    c.separation = Separation::Measure;
                } else {
                    fail("separation must be reverse or measure", s->value_column());
                }
            }
            while (const Token *h = args.find("hop")) {
                auto colon = h->value.find(':');
                if (colon == std::string::npos) {
                    fail("hop= takes QUBITS:GATE", h->value_column());
                }
                Token qs{h->key, h->value.substr(0, colon), true, h->column};
                Token g{h->key, h->value.substr(colon + 1), true, h->column + static_cast<int>(colon) + 1};
                c.hops.push_back(target_gate(qs, g));
            }
            args.done();
            add(std::move(c), col);
            return;
        }
        if (cmd == "remote_mcu") {
            RemoteMcuCommand c;
            c.request.controls = controls(args);
            const Token &target = args.need("target");
            c.path = path(args.need("path"));
            c.request.gate = target_gate(target, args.need("gate"));
            if (const Token *s = args.find("separation"); s && s->value != "reverse") {
                fail("remote_mcu supports separation=reverse only", s->value_column());
            }
            args.done();
            add(std::move(c), col);
            return;
        }
        if (cmd == "multipath") {
            MultipathCommand c;
            c.controls = controls(args);
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i].key != "path" || args.used.count(i)) {
                    continue;
                }
                args.used.insert(i);
                c.paths.push_back(path(tokens[i]));
                const Token *target = next_key(tokens, i, "target", args);
                const Token *g = next_key(tokens, i, "gate", args);
                if (!target || !g) {
                    fail("each path= needs its own target= and gate=", tokens[i].column);
                }
                c.gates.push_back(target_gate(*target, *g));
            }
            if (c.paths.empty()) {
                fail("multipath needs at least one path=", col);
            }
            args.done();
            add(std::move(c), col);
            return;
        }
        if (cmd == "tree") {
            TreeCommand c;
            c.controls = controls(args);
            const Token &root = args.need("root");
            c.tree.root = node(root.value, root.value_column());
            const Token &edges = args.need("edges");
            for (auto part : split(edges.value, ',')) {
                auto gt = part.find('>');
                if (gt == std::string_view::npos) {
                    fail("tree edges are written parent>child", edges.value_column());
                }
                c.tree.edges.emplace_back(node(part.substr(0, gt), edges.value_column()),
                                          node(part.substr(gt + 1), edges.value_column()));
            }
            try {
                validate_tree(graph(), c.tree);
            } catch (const PreconditionError &e) {
                fail(e.what(), edges.value_column());
            }
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i].key != "target" || args.used.count(i)) {
                    continue;
                }
                args.used.insert(i);
                const Token *g = next_key(tokens, i, "gate", args);
                if (!g) {
                    fail("each target= needs a gate=", tokens[i].column);
                }
                c.gates.push_back(target_gate(tokens[i], *g));
            }
            args.done();
            add(std::move(c), col);
            return;
        }
        if (cmd == "ghz_path") {
            GhzCommand c;
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (tokens[i].key != "path" || args.used.count(i)) {
                    continue;
                }
                args.used.insert(i);
                GhzBranch b;
                b.path = path(tokens[i]);
                const Token *qs = next_key(tokens, i, "qubits", args);
                if (!qs) {
                    fail("each path= needs qubits=", tokens[i].column);
                }
                b.qubits = qubits(*qs);
                c.branches.push_back(std::move(b));
            }
            if (c.branches.empty()) {
                fail("ghz_path needs at least one path=", col);
            }
            args.done();
            add(std::move(c), col);
            return;
        }
        if (cmd == "linklevel") {
            LinkCommand c;
            while (const Token *p = args.find("pair")) {
                auto qs = qubits(*p);
                if (qs.size() != 2) {
                    fail("pair= takes two data qubits", p->value_column());
                }
                c.pairs.emplace_back(qs[0], qs[1]);
            }
            args.done();
            add(std::move(c), col);
            return;
        }
        if (cmd == "place") {
            PlaceCommand c;
            c.walker = walker(args.need("walker"));
            const Token &n = args.need("node");
            c.at.vertex = node(n.value, n.value_column());
            c.at.coin = 0;
            if (const Token *coin = args.find("coin")) {
                c.at.coin = integer(*coin);
            }
            args.done();
            add(std::move(c), col);
            return;
        }
        if (cmd == "step") {
            add(StepCommand{step(tokens, args)}, col);
            return;
        }
        if (cmd == "oracle") {
            OracleCommand c;
            if (args.has("controls") || args.has("control")) {
                c.gate.controls = controls(args);
            }
            c.gate.targets = qubits(args.need("targets"));
            c.gate.unitary = gate(args.need("gate"));
            args.done();
            add(std::move(c), col);
            return;
        }
        fail("unknown command '" + cmd + "'", col);
    }

    static const Token *next_key(const std::vector<Token> &tokens, size_t from, std::string_view key, Args &args) {
        for (size_t j = from + 1; j < tokens.size(); ++j) {
            if (tokens[j].key == tokens[from].key) {
                break;
            }
            if (tokens[j].key == key && !args.used.count(j)) {
                args.used.insert(j);
                return &tokens[j];
            }
        }
        return nullptr;
    }

    QubitState qubit_state(const Token &t) const {
        const double r = 1 / std::sqrt(2.0);
        if (t.value == "0") {
            return {Amplitude(1), Amplitude(0)};
        }
        if (t.value == "1") {
            return {Amplitude(0), Amplitude(1)};
        }
        if (t.value == "+") {
            return {Amplitude(r), Amplitude(r)};
        }
        if (t.value == "-") {
            return {Amplitude(r), Amplitude(-r)};
        }
        if (t.value.size() > 2 && t.value.front() == '[' && t.value.back() == ']') {
            auto parts = split(std::string_view(t.value).substr(1, t.value.size() - 2), ',');
            if (parts.size() == 4) {
                std::array<double, 4> v{};
                bool ok = true;
                for (size_t i = 0; i < 4; ++i) {
                    auto d = to_double(parts[i]);
                    ok = ok && d.has_value();
                    v[i] = d.value_or(0);
                }
                if (ok) {
                    return {Amplitude(v[0], v[1]), Amplitude(v[2], v[3])};
                }
            }
        }
        fail("qubit state must be 0, 1, +, - or [re,im,re,im]", t.value_column());
    }

    OperatorSpec step(const std::vector<Token> &tokens, Args &args) {
        if (tokens.size() < 2 || tokens[1].has_value) {
            fail("step needs an operator kind", tokens[0].column);
        }
        args.used.insert(1);
        const std::string &kind = tokens[1].key;
        auto nd = [&](const char *key) {
            const Token &t = args.need(key);
            return node(t.value, t.value_column());
        };
        OperatorSpec out;
        if (kind == "coinperm") {
            int w = walker(args.need("walker"));
            VertexId v = nd("node");
            auto c = integers(args.need("swap"));
            if (c.size() != 2) {
                fail("swap= takes two coin values", tokens[1].column);
            }
            out = CoinPermOp{w, v, c[0], c[1]};
        } else if (kind == "coinblock") {
            int w = walker(args.need("walker"));
            VertexId v = nd("node");
            CoinAction a = action(args, "coin_gate");
            if (!std::holds_alternative<CoinUnitary>(a)) {
                fail("coinblock takes coins= and coin_gate=", tokens[1].column);
            }
            out = CoinBlockOp{w, {{v, std::get<CoinUnitary>(a)}}};
        } else if (kind == "datactrl") {
            int w = walker(args.need("walker"));
            VertexId v = nd("node");
            auto ctrl = controls(args);
            DataControlledCoinOp op{w, v, {}, {}, action(args, "coin_gate")};
            for (const auto &c : ctrl) {
                op.controls.push_back(c.qubit);
                op.pattern.push_back(c.value);
            }
            out = op;
        } else if (kind == "coindata") {
            int w = walker(args.need("walker"));
            VertexId v = nd("node");
            CoinControlledDataOp op;
            op.walker = w;
            op.vertex = v;
            if (const Token *when = args.find("when")) {
                op.coin_condition = integers(*when);
            }
            op.targets = qubits(args.need("targets"));
            op.unitary = gate(args.need("gate"));
            if (args.has("swap") || args.has("coins")) {
                op.coin_action = action(args, "coin_gate");
            }
            out = op;
        } else if (kind == "interact") {
            VertexId v = nd("node");
            const Token &coin = args.need("coin");
            int control = walker(args.need("control"));
            int target = walker(args.need("target"));
            out = WalkInteractionOp{v, integer(coin), control, target, action(args, "coin_gate")};
        } else if (kind == "fanout") {
            VertexId v = nd("node");
            const Token &coin = args.need("coin");
            auto succ = nodes(args.need("successors"));
            std::vector<int> walkers;
            const Token &wt = args.need("walkers");
            for (int w : integers(wt)) {
                Token t{wt.key, std::to_string(w), true, wt.column};
                walkers.push_back(walker(t));
            }
            FanoutOp op{v, integer(coin), succ, {}, walkers, false};
            for (VertexId u : succ) {
                auto p = graph().port_of(v, u);
                if (!p || *p == 0) {
                    fail("fan-out successor '" + graph().label(u) + "' is not a neighbor", tokens[1].column);
                }
                op.ports.push_back(*p);
            }
            if (const Token *inv = args.find("inverse")) {
                op.inverse = integer(*inv) != 0;
            }
            out = op;
        } else if (kind == "shift") {
            if (tokens.size() < 3 || tokens[2].has_value) {
                fail("usage: step shift flipflop|identity [walkers=...]", tokens[1].column);
            }
            args.used.insert(2);
            ShiftOp op;
            if (tokens[2].key == "flipflop") {
                op.kind = ShiftKind::FlipFlop;
            } else if (tokens[2].key != "identity") {
                fail("shift must be flipflop or identity", tokens[2].column);
            }
            if (const Token *wt = args.find("walkers")) {
                for (int w : integers(*wt)) {
                    Token t{wt->key, std::to_string(w), true, wt->column};
                    op.walkers.push_back(walker(t));
                }
            } else if (op.kind == ShiftKind::FlipFlop) {
                if (!script_.walkers) {
                    fail("declare `walkers` before low-level commands", tokens[0].column);
                }
                for (int w = 0; w < *script_.walkers; ++w) {
                    op.walkers.push_back(w);
                }
            }
            std::sort(op.walkers.begin(), op.walkers.end());
            out = op;
        } else if (kind == "measure") {
            WalkerSeparation e;
            e.walker = walker(args.need("walker"));
            e.a = nd("a");
            e.b = nd("b");
            const Token &corr = args.need("correct");
            e.correction_qubit = qubit(corr.value, corr.value_column());
            e.notify = e.b;
            if (const Token *n = args.find("notify")) {
                e.notify = node(n->value, n->value_column());
            }
            out = MeasureAndCorrectOp{{e}};
        } else {
            fail("unknown step kind '" + kind + "'", tokens[1].column);
        }
        args.done();
        return out;
    }
};

}  // namespace

Script parse_script(std::string_view text, const ParseOptions &options) {
    return Parser(options).run(text);
}

Script parse_script_file(const std::string &path, const ParseOptions &options) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open script '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ParseOptions opts = options;
    if (opts.base_dir == ".") {
        auto parent = std::filesystem::path(path).parent_path();
        opts.base_dir = parent.empty() ? "." : parent.string();
    }
    return parse_script(buf.str(), opts);
}

int walkers_needed(const NetworkGraph &g, const Command &command) {
    if (const auto *m = std::get_if<MultipathCommand>(&command)) {
        return static_cast<int>(m->paths.size());
    }
    if (const auto *t = std::get_if<TreeCommand>(&command)) {
        TreeInfo info = validate_tree(g, t->tree);
        int leaves = 0;
        for (VertexId v : info.nodes()) {
            leaves += info.successors(v).empty() ? 1 : 0;
        }
        return std::max(1, leaves);
    }
    if (const auto *h = std::get_if<GhzCommand>(&command)) {
        return static_cast<int>(h->branches.size());
    }
    if (std::holds_alternative<LinkCommand>(command)) {
        return static_cast<int>(g.num_directed_edges() / 2);
    }
    if (std::holds_alternative<RemoteCuCommand>(command) || std::holds_alternative<RemoteMcuCommand>(command)) {
        return 1;
    }
    return 0;
}

namespace {

struct Writer {
    const Script &script;
    const NetworkGraph &g;
    RegisterLayout probe;

    std::string node(VertexId v) const {
        return g.label(v);
    }
    std::string qubit(int i) const {
        const auto &dq = probe.data_order().at(i);
        return g.label(dq.node) + "." + dq.name;
    }
    std::string qubits(const std::vector<int> &qs) const {
        std::string out;
        for (size_t i = 0; i < qs.size(); ++i) {
            out += (i ? "," : "") + qubit(qs[i]);
        }
        return out;
    }
    std::string nodes(const std::vector<VertexId> &vs) const {
        std::string out;
        for (size_t i = 0; i < vs.size(); ++i) {
            out += (i ? "," : "") + node(vs[i]);
        }
        return out;
    }
    static std::string ints(const std::vector<int> &xs) {
        std::string out;
        for (size_t i = 0; i < xs.size(); ++i) {
            out += (i ? "," : "") + std::to_string(xs[i]);
        }
        return out;
    }
    std::string controls(const std::vector<ControlQubit> &cs) const {
        std::vector<int> qs;
        std::string pattern;
        for (const auto &c : cs) {
            qs.push_back(c.qubit);
            pattern += c.value ? '1' : '0';
        }
        return "controls=" + qubits(qs) + " string=" + pattern;
    }
    static std::string action(const CoinAction &a) {
        if (const auto *s = std::get_if<CoinSwap>(&a)) {
            return "swap=" + std::to_string(s->c1) + "," + std::to_string(s->c2);
        }
        const auto &u = std::get<CoinUnitary>(a);
        return "coins=" + ints(u.coins) + " coin_gate=" + format_gate(u.unitary);
    }
    std::string gate(const NodeGate &gate, const char *key = "target") const {
        return std::string(key) + "=" + qubits(gate.targets) + " gate=" + format_gate(gate.unitary);
    }

    std::string operator()(const RemoteCuCommand &c) const {
        std::string out = "remote_cu " + controls(c.request.controls) + " path=" + nodes(c.path.nodes) + " " +
                          gate(c.request.gate) + " separation=" +
                          (c.separation == Separation::Measure ? "measure" : "reverse");
        for (const auto &h : c.hops) {
            out += " hop=" + qubits(h.targets) + ":" + format_gate(h.unitary);
        }
        return out;
    }
    std::string operator()(const RemoteMcuCommand &c) const {
        return "remote_mcu " + controls(c.request.controls) + " path=" + nodes(c.path.nodes) + " " +
               gate(c.request.gate);
    }
    std::string operator()(const MultipathCommand &c) const {
        std::string out = "multipath " + controls(c.controls);
        for (size_t i = 0; i < c.paths.size(); ++i) {
            out += " path=" + nodes(c.paths[i].nodes) + " " + gate(c.gates[i]);
        }
        return out;
    }
    std::string operator()(const TreeCommand &c) const {
        std::string out = "tree " + controls(c.controls) + " root=" + node(c.tree.root) + " edges=";
        for (size_t i = 0; i < c.tree.edges.size(); ++i) {
            out += (i ? "," : "") + node(c.tree.edges[i].first) + ">" + node(c.tree.edges[i].second);
        }
        for (const auto &gt : c.gates) {
            out += " " + gate(gt);
        }
        return out;
    }
    std::string operator()(const GhzCommand &c) const {
        std::string out = "ghz_path";
        for (const auto &b : c.branches) {
            out += " path=" + nodes(b.path.nodes) + " qubits=" + qubits(b.qubits);
        }
        return out;
    }
    std::string operator()(const LinkCommand &c) const {
        std::string out = "linklevel";
        for (auto [a, b] : c.pairs) {
            out += " pair=" + qubit(a) + "," + qubit(b);
        }
        return out;
    }
    std::string operator()(const PlaceCommand &c) const {
        return "place walker=" + std::to_string(c.walker) + " node=" + node(c.at.vertex) +
               " coin=" + std::to_string(c.at.coin);
    }
    std::string operator()(const OracleCommand &c) const {
        std::string out = "oracle";
        if (!c.gate.controls.empty()) {
            out += " " + controls(c.gate.controls);
        }
        return out + " targets=" + qubits(c.gate.targets) + " gate=" + format_gate(c.gate.unitary);
    }
    std::string operator()(const StepCommand &c) const {
        return "step " + std::visit(*this, c.op);
    }

    std::string operator()(const ShiftOp &op) const {
        if (op.kind == ShiftKind::Identity) {
            return op.walkers.empty() ? "shift identity" : "shift identity walkers=" + ints(op.walkers);
        }
        return "shift flipflop walkers=" + ints(op.walkers);
    }
    std::string operator()(const CoinPermOp &op) const {
        return "coinperm walker=" + std::to_string(op.walker) + " node=" + node(op.vertex) +
               " swap=" + std::to_string(op.c1) + "," + std::to_string(op.c2);
    }
    std::string operator()(const CoinBlockOp &op) const {
        const auto &e = op.blocks.at(0);
        return "coinblock walker=" + std::to_string(op.walker) + " node=" + node(e.vertex) + " " + action(e.block);
    }
    std::string operator()(const DataControlledCoinOp &op) const {
        std::vector<ControlQubit> cs;
        for (size_t i = 0; i < op.controls.size(); ++i) {
            cs.push_back({op.controls[i], op.pattern[i]});
        }
        return "datactrl walker=" + std::to_string(op.walker) + " node=" + node(op.vertex) + " " + controls(cs) +
               " " + action(op.action);
    }
    std::string operator()(const CoinControlledDataOp &op) const {
        std::string out = "coindata walker=" + std::to_string(op.walker) + " node=" + node(op.vertex);
        if (!op.coin_condition.empty()) {
            out += " when=" + ints(op.coin_condition);
        }
        out += " targets=" + qubits(op.targets) + " gate=" + format_gate(op.unitary);
        if (op.coin_action) {
            out += " " + action(*op.coin_action);
        }
        return out;
    }
    std::string operator()(const WalkInteractionOp &op) const {
        return "interact node=" + node(op.vertex) + " coin=" + std::to_string(op.control_coin) +
               " control=" + std::to_string(op.control_walker) + " target=" + std::to_string(op.target_walker) +
               " " + action(op.action);
    }
    std::string operator()(const FanoutOp &op) const {
        return "fanout node=" + node(op.vertex) + " coin=" + std::to_string(op.incoming) +
               " successors=" + nodes(op.successors) + " walkers=" + ints(op.walkers) +
               (op.inverse ? " inverse=1" : "");
    }
    std::string operator()(const MeasureAndCorrectOp &op) const {
        std::string out;
        for (size_t i = 0; i < op.entries.size(); ++i) {
            const auto &e = op.entries[i];
            out += (i ? "\nstep " : "") + std::string("measure walker=") + std::to_string(e.walker) +
                   " a=" + node(e.a) + " b=" + node(e.b) + " correct=" + qubit(e.correction_qubit) +
                   " notify=" + node(e.notify);
        }
        return out;
    }
};

std::string state_text(const QubitState &q) {
    const double r = 1 / std::sqrt(2.0);
    if (q[0] == Amplitude(1) && q[1] == Amplitude(0)) {
        return "0";
    }
    if (q[0] == Amplitude(0) && q[1] == Amplitude(1)) {
        return "1";
    }
    if (q[0] == Amplitude(r) && q[1] == Amplitude(r)) {
        return "+";
    }
    if (q[0] == Amplitude(r) && q[1] == Amplitude(-r)) {
        return "-";
    }
    return "[" + fmt_double(q[0].real()) + "," + fmt_double(q[0].imag()) + "," + fmt_double(q[1].real()) + "," +
           fmt_double(q[1].imag()) + "]";
}

}  // namespace

std::string serialize_script(const Script &script) {
    if (!script.graph) {
        throw PreconditionError("script has no network");
    }
    Writer w{script, *script.graph, RegisterLayout(script.graph, 0)};
    std::string out = "network " + script.network_path + "\n";
    if (script.walkers) {
        out += "walkers " + std::to_string(*script.walkers) + "\n";
    }
    for (const auto &[q, state] : script.inits) {
        out += "init " + w.qubit(q) + "=" + state_text(state) + "\n";
    }
    for (const auto &c : script.commands) {
        out += std::visit(w, c.command) + "\n";
    }
    return out;
}

}  // namespace qwcp
