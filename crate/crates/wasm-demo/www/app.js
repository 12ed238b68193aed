import init, { monodromy, classify, atlas_grid } from "./pkg/gof_wasm_demo.js";

const $ = (id) => document.getElementById(id);

function fail(target, err) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(err.message ?? err);
  target.appendChild(p);
}

function showMonodromy() {
  const out = $("braid-out");
  try {
    const r = JSON.parse(monodromy($("braid").value));
    const m = r.matrix.map((row) => row.join(" ")).join("; ");
    out.className = "";
    out.textContent =
      `matrix  (${m})\ntrace   ${r.trace}\nclass   ${r.class}` +
      (r.rl_word ? `\nRL word ${r.rl_word}` : "") +
      `\nreduced ${r.braid || "(identity)"}`;
  } catch (e) {
    fail(out, e);
  }
}

function cell(row, text, cls) {
  const td = document.createElement("td");
  td.textContent = text;
  if (cls) td.className = cls;
  row.appendChild(td);
}

function statusClass(status) {
  return status === "left-orderable" ? "lo" : status === "not-left-orderable" ? "nlo" : "";
}

function showLens() {
  const out = $("lens-out");
  const num = (id) => Number.parseInt($(id).value, 10);
  try {
    const r = JSON.parse(classify(num("alpha"), num("beta"), num("lo"), num("hi")));
    out.innerHTML = "";
    const title = document.createElement("p");
    const space = `L(${r.space.alpha},${r.space.beta})`;
    title.textContent = r.knots.length ? `${space}: ${r.knots.length} knot(s)` : `${space}: no GOF-knots`;
    out.appendChild(title);
    if (!r.knots.length) return;
    const table = document.createElement("table");
    const head = table.insertRow();
    for (const h of ["knot", "braid", "matrix", "trace", "all integral", ...r.knots[0].verdicts.map((v) => `n=${v.slope}`)]) {
      const th = document.createElement("th");
      th.textContent = h;
      head.appendChild(th);
    }
    for (const k of r.knots) {
      const row = table.insertRow();
      const params = Object.entries(k.params).map(([key, v]) => `${key}=${v}`).join(",");
      cell(row, params ? `${k.label}(${params})` : k.label);
      cell(row, k.braid);
      cell(row, JSON.stringify(k.matrix));
      cell(row, k.trace);
      cell(row, k.all_integral_lo, k.all_integral_lo === "all-lo" ? "lo" : "");
      for (const v of k.verdicts) {
        cell(row, v.status === "left-orderable" ? "LO" : v.status === "not-left-orderable" ? "not LO" : "?", statusClass(v.status)).title = v.rule;
      }
    }
    out.appendChild(table);
  } catch (e) {
    fail(out, e);
  }
}

let cells = [];
const SCALE = 6;

function drawGrid() {
  const canvas = $("grid");
  try {
    const max = Number.parseInt($("max-alpha").value, 10);
    cells = JSON.parse(atlas_grid(max));
    // x = beta, y = alpha; canonical beta is below alpha/2
    const width = Math.max(2, Math.floor(max / 2) + 1);
    canvas.width = width * SCALE;
    canvas.height = (max + 1) * SCALE;
    const ctx = canvas.getContext("2d");
    ctx.fillStyle = "#fff";
    ctx.fillRect(0, 0, canvas.width, canvas.height);
    for (const c of cells) {
      ctx.fillStyle = c.knots === 0 ? "#eee" : c.lo ? "#2a7" : "#9ab";
      ctx.fillRect(c.beta * SCALE, c.alpha * SCALE, SCALE - 1, SCALE - 1);
    }
  } catch (e) {
    fail($("grid-hover"), e);
  }
}

function hoverGrid(event) {
  const rect = event.target.getBoundingClientRect();
  const beta = Math.floor((event.clientX - rect.left) / SCALE);
  const alpha = Math.floor((event.clientY - rect.top) / SCALE);
  const c = cells.find((c) => c.alpha === alpha && c.beta === beta);
  $("grid-hover").textContent = c
    ? `L(${c.alpha},${c.beta}): ${c.labels.length ? c.labels.join(", ") : "no GOF-knots"}`
    : " ";
}

function onSubmit(id, handler) {
  $(id).addEventListener("submit", (event) => {
    event.preventDefault();
    handler();
  });
}

await init();
onSubmit("braid-form", showMonodromy);
onSubmit("lens-form", showLens);
onSubmit("grid-form", drawGrid);
$("grid").addEventListener("mousemove", hoverGrid);
showMonodromy();
showLens();
drawGrid();
