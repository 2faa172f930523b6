#include "coalp/dot.hpp"

#include <sstream>

#include "coalp/printer.hpp"

namespace coalp {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

struct DotWriter {
    const CoTree& t;
    std::ostringstream os;
    int next = 0;

    int emitAnd(int id) {
        int me = next++;
        os << "  n" << me << " [shape=ellipse,label=\"" << escape(toString(t.nodes[id].atom))
           << "\"];\n";
        if (t.nodes[id].decided) {
            int mark = next++;
            os << "  n" << mark << " [shape=" << (*t.nodes[id].decided ? "box" : "plaintext")
               << ",label=\"" << (*t.nodes[id].decided ? "[]" : "x") << "\"];\n";
            os << "  n" << me << " -> n" << mark << ";\n";
            return me;
        }
        for (const auto& alt : t.nodes[id].alts) {
            int orId = next++;
            os << "  n" << orId << " [shape=point];\n";
            os << "  n" << me << " -> n" << orId << ";\n";
            if (alt.children.empty()) {
                int box = next++;
                os << "  n" << box << " [shape=box,label=\"[]\"];\n";
                os << "  n" << orId << " -> n" << box << ";\n";
            }
            for (int c : alt.children) {
                int childId = emitAnd(c);
                os << "  n" << orId << " -> n" << childId << ";\n";
            }
        }
        return me;
    }
};

}  // namespace

std::string exportDot(const CoTree& t) {
    DotWriter w{t};
    w.os << "digraph cotree {\n  node [fontname=\"monospace\"];\n";
    w.emitAnd(0);
    w.os << "}\n";
    return w.os.str();
}

}  // namespace coalp
