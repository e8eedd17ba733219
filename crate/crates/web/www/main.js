import init, { factor, analyze, scan, examples } from "./pkg/qclrc_web.js";

const $ = (id) => document.getElementById(id);

function fail(el, err) {
  el.textContent = String(err);
  el.classList.add("error");
}

function ok(el, text) {
  el.textContent = text;
  el.classList.remove("error");
}

function showFactors() {
  const m = Number($("factor-m").value);
  const q = Number($("factor-q").value);
  const table = $("factor-table");
  table.replaceChildren();
  try {
    const { data } = JSON.parse(factor(m, q));
    ok($("factor-summary"),
      `x^${data.m} − 1 over F_${data.q}: ${data.factors.length} factors, splitting field of degree ${data.splitting_degree}`);
    const head = table.insertRow();
    for (const h of ["i", "u", "degree", "b(x)", "coset"]) {
      const th = document.createElement("th");
      th.textContent = h;
      head.appendChild(th);
    }
    for (const f of data.factors) {
      const row = table.insertRow();
      row.insertCell().textContent = f.index;
      row.insertCell().textContent = f.representative;
      row.insertCell().textContent = f.degree;
      const poly = row.insertCell();
      poly.className = "poly";
      poly.textContent = f.poly;
      const coset = row.insertCell();
      coset.className = "poly";
      coset.textContent = `{${f.coset.join(",")}}`;
    }
  } catch (e) {
    fail($("factor-summary"), e);
  }
}

function runAnalyze() {
  try {
    ok($("analyze-out"), JSON.parse(analyze($("spec").value)).text);
  } catch (e) {
    fail($("analyze-out"), e);
  }
}

const SERIES = [
  { key: "d_s", label: "d_S", color: "#1f77b4" },
  { key: "d_go", label: "d_GO (published)", color: "#d62728" },
  { key: "d_certified", label: "d certified", color: "#2ca02c" },
];

function drawChart(rows) {
  const canvas = $("chart");
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  const pad = { left: 48, right: 16, top: 16, bottom: 40 };
  ctx.clearRect(0, 0, width, height);
  if (rows.length === 0) return;

  const jMax = Math.max(1, rows[rows.length - 1].j);
  const yMax = Math.max(...rows.flatMap((r) => SERIES.map((s) => r[s.key]))) + 1;
  const x = (j) => pad.left + (j / jMax) * (width - pad.left - pad.right);
  const y = (v) => height - pad.bottom - (v / yMax) * (height - pad.top - pad.bottom);

  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#444";
  ctx.font = "12px system-ui";
  ctx.beginPath();
  ctx.moveTo(pad.left, pad.top);
  ctx.lineTo(pad.left, height - pad.bottom);
  ctx.lineTo(width - pad.right, height - pad.bottom);
  ctx.stroke();
  const yStep = Math.max(1, Math.ceil(yMax / 8));
  for (let v = 0; v <= yMax; v += yStep) {
    ctx.fillText(String(v), pad.left - 28, y(v) + 4);
  }
  const jStep = Math.max(1, Math.ceil(jMax / 16));
  for (let j = 0; j <= jMax; j += jStep) {
    ctx.fillText(String(j), x(j) - 4, height - pad.bottom + 16);
  }
  ctx.fillText("j", width / 2, height - 6);

  for (const [i, s] of SERIES.entries()) {
    ctx.strokeStyle = s.color;
    ctx.fillStyle = s.color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    rows.forEach((r, k) => (k === 0 ? ctx.moveTo(x(r.j), y(r[s.key])) : ctx.lineTo(x(r.j), y(r[s.key]))));
    ctx.stroke();
    for (const r of rows) ctx.fillRect(x(r.j) - 2, y(r[s.key]) - 2, 4, 4);
    ctx.fillRect(width - 170, pad.top + 16 * i, 10, 10);
    ctx.fillText(s.label, width - 154, pad.top + 16 * i + 10);
  }
  ctx.lineWidth = 1;

  // mark members where d_S meets the published lower bound
  ctx.strokeStyle = "#000";
  for (const r of rows.filter((r) => r.status === "optimal")) {
    ctx.beginPath();
    ctx.arc(x(r.j), y(r.d_s), 6, 0, 2 * Math.PI);
    ctx.stroke();
  }
}

function runScan() {
  try {
    const { data, text } = JSON.parse(scan($("spec").value, Number($("jmax").value)));
    drawChart(data.rows);
    ok($("scan-out"), text);
  } catch (e) {
    drawChart([]);
    fail($("scan-out"), e);
  }
}

async function main() {
  await init();
  $("status").textContent = "";
  const list = JSON.parse(examples());
  const select = $("example");
  for (const ex of list) {
    const opt = document.createElement("option");
    opt.value = ex.id;
    opt.textContent = `${ex.id}: ${ex.title}`;
    select.appendChild(opt);
  }
  const load = () => {
    const ex = list.find((e) => e.id === select.value);
    $("spec").value = ex.spec;
    if (ex.jmax !== null) $("jmax").value = ex.jmax;
  };
  select.addEventListener("change", load);
  select.value = "4.6";
  load();

  $("factor-form").addEventListener("submit", (e) => {
    e.preventDefault();
    showFactors();
  });
  $("analyze").addEventListener("click", runAnalyze);
  $("scan").addEventListener("click", runScan);
  showFactors();
  runAnalyze();
  runScan();
}

main().catch((e) => fail($("status"), e));
