#include "qsat12/qsat2.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsat12 {

ImplicationGraph build_implication_graph(const Formula &f)
{
	ImplicationGraph g;
	g.num_vertices = 2 * f.num_vars();
	g.succ.assign(g.num_vertices, {});
	auto add_edge = [&](Lit from, Lit to) {
		g.succ[from.index()].push_back(to.index());
		++g.num_edges;
	};
	for (const Clause &c : f.clauses()) {
		if (c.size() == 1) {
			add_edge(c.lits[0].complement(), c.lits[0]);
		} else if (c.size() == 2) {
			add_edge(c.lits[0].complement(), c.lits[1]);
			add_edge(c.lits[1].complement(), c.lits[0]);
		} else {
			throw std::invalid_argument(
			    "implication graph requires clauses of size 1 or 2, got " +
			    std::to_string(c.size()));
		}
	}
	return g;
}

// iterative Tarjan; recursion depth would otherwise scale with the number of
// literals
ComponentLabeling strong_components(const ImplicationGraph &g)
{
	int n = g.num_vertices;
	ComponentLabeling lab;
	lab.comp.assign(n, -1);

	std::vector<int> index(n, -1), lowlink(n, 0);
	std::vector<bool> on_stack(n, false);
	std::vector<int> stack;
	// DFS frame: vertex and position within its successor list
	std::vector<std::pair<int, size_t>> frames;
	int next_index = 0;

	for (int root = 0; root < n; ++root) {
		if (index[root] != -1)
			continue;
		frames.push_back({root, 0});
		while (!frames.empty()) {
			auto &[v, child] = frames.back();
			if (child == 0) {
				index[v] = lowlink[v] = next_index++;
				stack.push_back(v);
				on_stack[v] = true;
			}
			if (child < g.succ[v].size()) {
				int w = g.succ[v][child++];
				if (index[w] == -1)
					frames.push_back({w, 0});
				else if (on_stack[w])
					lowlink[v] = std::min(lowlink[v], index[w]);
				continue;
			}
			if (lowlink[v] == index[v]) {
				int w;
				do {
					w = stack.back();
					stack.pop_back();
					on_stack[w] = false;
					lab.comp[w] = lab.count;
				} while (w != v);
				++lab.count;
			}
			frames.pop_back();
			if (!frames.empty()) {
				int parent = frames.back().first;
				lowlink[parent] =
				    std::min(lowlink[parent], lowlink[v]);
			}
		}
	}
	return lab;
}

namespace {

// components reachable from `start` in the condensation, including itself
std::vector<char> reachable_components(const ImplicationGraph &g,
                                       const ComponentLabeling &lab,
                                       int start_comp)
{
	std::vector<char> seen(lab.count, 0);
	// component -> member vertices is not materialized; walk the vertex
	// graph instead, visiting each vertex once
	std::vector<char> visited(g.num_vertices, 0);
	std::vector<int> todo;
	for (int v = 0; v < g.num_vertices; ++v)
		if (lab.comp[v] == start_comp) {
			todo.push_back(v);
			visited[v] = 1;
		}
	seen[start_comp] = 1;
	while (!todo.empty()) {
		int v = todo.back();
		todo.pop_back();
		for (int w : g.succ[v]) {
			if (visited[w])
				continue;
			visited[w] = 1;
			seen[lab.comp[w]] = 1;
			todo.push_back(w);
		}
	}
	return seen;
}

} // namespace

Verdict qsat2_truth(const Formula &f)
{
	if (has_empty_clause(f))
		return Verdict::False;

	ImplicationGraph g = build_implication_graph(f);
	ComponentLabeling lab = strong_components(g);

	// (a) contradictory existential variable
	for (Var v : f.prefix().existentials) {
		if (lab.comp[Lit::positive(v).index()] ==
		    lab.comp[Lit::negative(v).index()])
			return Verdict::False;
	}

	const auto &universals = f.prefix().universals;
	for (Var uv : universals) {
		for (bool negative : {false, true}) {
			Lit u(uv, negative);
			auto seen =
			    reachable_components(g, lab, lab.comp[u.index()]);
			// (b) universal literal forcing its own complement
			if (seen[lab.comp[u.complement().index()]])
				return Verdict::False;
			// (c) universal literal forcing another universal
			for (Var wv : universals) {
				if (wv == uv)
					continue;
				if (seen[lab.comp[Lit::positive(wv).index()]] ||
				    seen[lab.comp[Lit::negative(wv).index()]])
					return Verdict::False;
			}
		}
	}
	return Verdict::True;
}

}
