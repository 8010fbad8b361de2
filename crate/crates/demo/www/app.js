// Demo page logic: drives the wasm exports (generate / color_instance /
// oracle_check) and renders the instance on a canvas. Build pkg/ with
// wasm-bindgen first; see the repository README.

const ORACLE_MAX_N = 16;
const ORACLE_NODE_LIMIT = 2_000_000;

const el = (id) => document.getElementById(id);
const canvas = el("canvas");
const ctx = canvas.getContext("2d");

let wasm = null;
let instance = null; // {n, edges, lists, layout, maxDegree}
let coloring = null; // array of ints or null
let lastOutcome = null;
let selected = null;

function setStatus(text, cls = "") {
  const node = el("status");
  node.textContent = text;
  node.className = cls;
}

function colorOf(c) {
  // golden-angle hues keep nearby color ids visually distinct
  const hue = (c * 137.508) % 360;
  return `hsl(${hue} 70% 55%)`;
}

function vertexAt(x, y) {
  if (!instance) return null;
  const r = vertexRadius();
  let best = null;
  let bestDist = r * r * 4;
  instance.layout.forEach(([px, py], v) => {
    const dx = px * canvas.width - x;
    const dy = py * canvas.height - y;
    const d2 = dx * dx + dy * dy;
    if (d2 < bestDist) {
      best = v;
      bestDist = d2;
    }
  });
  return best;
}

function vertexRadius() {
  return Math.max(7, Math.min(18, 160 / Math.sqrt(instance.n)));
}

function draw() {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!instance) return;
  const { edges, layout } = instance;
  const px = ([x, y]) => [x * canvas.width, y * canvas.height];

  ctx.lineWidth = 1.5;
  ctx.strokeStyle = "#4a5160";
  for (const [u, v] of edges) {
    const [x1, y1] = px(layout[u]);
    const [x2, y2] = px(layout[v]);
    ctx.beginPath();
    ctx.moveTo(x1, y1);
    ctx.lineTo(x2, y2);
    ctx.stroke();
  }

  const r = vertexRadius();
  layout.forEach((p, v) => {
    const [x, y] = px(p);
    ctx.beginPath();
    ctx.arc(x, y, r, 0, Math.PI * 2);
    ctx.fillStyle = coloring ? colorOf(coloring[v]) : "#2d323d";
    ctx.fill();
    ctx.lineWidth = v === selected ? 3 : 1.5;
    ctx.strokeStyle = v === selected ? "#ffffff" : "#11131a";
    ctx.stroke();
    if (r >= 9) {
      ctx.fillStyle = coloring ? "#11131a" : "#c6cbd4";
      ctx.font = `${Math.round(r)}px system-ui`;
      ctx.textAlign = "center";
      ctx.textBaseline = "middle";
      ctx.fillText(String(v + 1), x, y);
    }
  });
}

function showVertex(v) {
  selected = v;
  const info = el("vertexinfo");
  if (v === null || !instance) {
    info.textContent = "click a vertex";
  } else {
    const list = instance.lists[v].join(", ");
    const chosen = coloring ? coloring[v] : null;
    info.innerHTML =
      `vertex <code>${v + 1}</code><br>list: <code>{${list}}</code><br>` +
      (chosen !== null
        ? `color: <span class="chip" style="background:${colorOf(chosen)}"></span><code>${chosen}</code>`
        : "uncolored");
  }
  draw();
}

function showLegend() {
  const node = el("legend");
  if (!coloring) {
    node.textContent = "—";
    return;
  }
  const used = [...new Set(coloring)].sort((a, b) => a - b);
  node.innerHTML = used
    .map((c) => `<span class="chip" style="background:${colorOf(c)}"></span>${c}`)
    .join("&nbsp;&nbsp;");
}

function showCounters(counters) {
  const node = el("counters");
  if (!counters) {
    node.textContent = "—";
    return;
  }
  node.innerHTML =
    "<table>" +
    Object.entries(counters)
      .map(([k, v]) => `<tr><td>${k}</td><td>${v}</td></tr>`)
      .join("") +
    "</table>";
}

function currentParams() {
  const kind = el("kind").value;
  const params = {
    kind,
    seed: Number(el("seed").value) || 0,
    lists: {
      mode: el("lmode").value,
      seed: Number(el("lseed").value) || 0,
    },
  };
  if (!["petersen", "prism"].includes(kind)) params.n = Number(el("n").value);
  if (kind === "regular") params.d = Number(el("d").value);
  if (kind === "connected") params.dmax = Number(el("dmax").value);
  if (el("lsize").value) params.lists.size = Number(el("lsize").value);
  if (el("lpalette").value) params.lists.palette = Number(el("lpalette").value);
  return params;
}

function generate() {
  const out = JSON.parse(wasm.generate(JSON.stringify(currentParams())));
  if (!out.ok) {
    setStatus(out.error, "bad");
    return;
  }
  instance = out;
  coloring = null;
  lastOutcome = null;
  selected = null;
  el("color").disabled = false;
  el("oracle").disabled = instance.n > ORACLE_MAX_N;
  setStatus(
    `generated: n=${out.n}, m=${out.edges.length}, Δ=${out.maxDegree}` +
      (instance.n > ORACLE_MAX_N ? " (too big for the oracle button)" : "")
  );
  showVertex(null);
  showLegend();
  showCounters(null);
}

function instanceJson() {
  return JSON.stringify({
    n: instance.n,
    edges: instance.edges,
    lists: instance.lists,
  });
}

function runColor() {
  const out = JSON.parse(wasm.color_instance(instanceJson()));
  if (!out.ok) {
    setStatus(out.error, "bad");
    return;
  }
  lastOutcome = out;
  showCounters(out.counters);
  if (out.outcome === "success") {
    coloring = out.coloring;
    const clean = out.violations.length === 0;
    setStatus(
      clean
        ? `success: proper list coloring found (verifier clean)`
        : `BUG: verifier found ${out.violations.length} violations`,
      clean ? "good" : "bad"
    );
  } else if (out.outcome === "infeasible") {
    coloring = null;
    setStatus(`infeasible: ${out.witness}`, "bad");
  } else {
    coloring = null;
    setStatus(`not applicable: ${out.reason} on component {${out.component.map((v) => v + 1).join(", ")}}`, "bad");
  }
  showLegend();
  showVertex(selected);
}

function runOracle() {
  const out = JSON.parse(wasm.oracle_check(instanceJson(), ORACLE_NODE_LIMIT));
  if (!out.ok) {
    setStatus(out.error, "bad");
    return;
  }
  let verdict;
  if (out.result === "limit-exceeded") {
    verdict = "oracle: node budget exhausted";
  } else if (!lastOutcome) {
    verdict = `oracle: ${out.result}`;
  } else if (lastOutcome.outcome === "success") {
    verdict =
      out.result === "solved"
        ? "oracle agrees: a coloring exists"
        : "oracle DISAGREES with success";
  } else if (lastOutcome.outcome === "infeasible") {
    verdict =
      out.result === "unsatisfiable"
        ? "oracle agrees: exactly infeasible"
        : "oracle DISAGREES with infeasibility";
  } else {
    verdict = `oracle (outside the guarantee): ${out.result}`;
  }
  setStatus(verdict, verdict.includes("DISAGREES") ? "bad" : "good");
}

canvas.addEventListener("click", (event) => {
  const rect = canvas.getBoundingClientRect();
  const x = ((event.clientX - rect.left) / rect.width) * canvas.width;
  const y = ((event.clientY - rect.top) / rect.height) * canvas.height;
  showVertex(vertexAt(x, y));
});

el("generate").addEventListener("click", generate);
el("color").addEventListener("click", runColor);
el("oracle").addEventListener("click", runOracle);

try {
  const module = await import("./pkg/choosable_demo.js");
  await module.default();
  wasm = module;
  setStatus("ready — generate an instance");
  generate();
  runColor();
} catch (e) {
  setStatus(
    "cannot load ./pkg/choosable_demo.js — build the wasm package first (see README)",
    "bad"
  );
  console.error(e);
}
