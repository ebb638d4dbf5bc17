import type { NetworkResponse } from "./types";

// d3 is loaded globally from a script tag (UMD build); only its types are
// imported here so the compiled module stays free of bare imports.
declare const d3: typeof import("d3");

interface SimNode extends d3.SimulationNodeDatum {
  id: string;
  name: string;
  kind: "char" | "place";
  f: number;
  degree: number;
}

interface SimLink extends d3.SimulationLinkDatum<SimNode> {
  score: number;
}

const FILL = { char: "lightblue", place: "palegreen" } as const;

/**
 * Client-side force-directed preview of the network document. Layout here is
 * cosmetic; the downloadable DOT text from the server stays canonical.
 */
export class GraphView {
  private simulation: d3.Simulation<SimNode, SimLink> | null = null;

  constructor(private readonly svg: SVGSVGElement) {}

  render(network: NetworkResponse): void {
    this.simulation?.stop();
    const width = this.svg.clientWidth || 800;
    const height = this.svg.clientHeight || 520;
    const root = d3.select(this.svg);
    root.selectAll("*").remove();

    const degree = new Map<string, number>();
    for (const edge of network.edges) {
      degree.set(edge.source, (degree.get(edge.source) ?? 0) + 1);
      degree.set(edge.target, (degree.get(edge.target) ?? 0) + 1);
    }
    const nodes: SimNode[] = network.nodes.map((n) => ({
      id: n.id,
      name: n.name,
      kind: n.type,
      f: n.f,
      degree: degree.get(n.id) ?? 0,
    }));
    const links: SimLink[] = network.edges.map((e) => ({
      source: e.source,
      target: e.target,
      score: e.score,
    }));

    const link = root
      .append("g")
      .selectAll("line")
      .data(links)
      .join("line")
      .attr("stroke", "#888")
      .attr("stroke-width", (d) => 1 + 4 * d.score);

    const edgeLabel = root
      .append("g")
      .selectAll("text")
      .data(links)
      .join("text")
      .attr("class", "edge-label")
      .attr("font-size", 10)
      .attr("fill", "#444")
      .text((d) => d.score.toFixed(2));

    const node = root
      .append("g")
      .selectAll<SVGGElement, SimNode>("g")
      .data(nodes)
      .join("g")
      .attr("class", (d) => (d.degree === 0 ? "node isolated" : "node"));

    node
      .append("circle")
      .attr("r", (d) => 8 + 10 * d.f)
      .attr("fill", (d) => FILL[d.kind])
      .attr("stroke", "#333")
      .attr("stroke-dasharray", (d) => (d.degree === 0 ? "3,2" : null));

    node
      .append("text")
      .attr("dy", -14)
      .attr("text-anchor", "middle")
      .attr("font-size", 12)
      .text((d) => `${d.name} ${d.f.toFixed(2)}`);

    this.simulation = d3
      .forceSimulation(nodes)
      .force(
        "link",
        d3
          .forceLink<SimNode, SimLink>(links)
          .id((d) => d.id)
          .distance((d) => 160 - 100 * d.score),
      )
      .force("charge", d3.forceManyBody().strength(-250))
      .force("center", d3.forceCenter(width / 2, height / 2))
      .force("collide", d3.forceCollide(26))
      .on("tick", () => {
        link
          .attr("x1", (d) => (d.source as SimNode).x ?? 0)
          .attr("y1", (d) => (d.source as SimNode).y ?? 0)
          .attr("x2", (d) => (d.target as SimNode).x ?? 0)
          .attr("y2", (d) => (d.target as SimNode).y ?? 0);
        edgeLabel
          .attr("x", (d) => (((d.source as SimNode).x ?? 0) + ((d.target as SimNode).x ?? 0)) / 2)
          .attr("y", (d) => (((d.source as SimNode).y ?? 0) + ((d.target as SimNode).y ?? 0)) / 2);
        node.attr("transform", (d) => `translate(${d.x ?? 0},${d.y ?? 0})`);
      });

    node.call(
      d3
        .drag<SVGGElement, SimNode>()
        .on("start", (event, d) => {
          if (!event.active) this.simulation?.alphaTarget(0.3).restart();
          d.fx = d.x;
          d.fy = d.y;
        })
        .on("drag", (event, d) => {
          d.fx = event.x;
          d.fy = event.y;
        })
        .on("end", (event, d) => {
          if (!event.active) this.simulation?.alphaTarget(0);
          d.fx = null;
          d.fy = null;
        }),
    );
  }
}
