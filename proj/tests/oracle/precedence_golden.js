// Generates operator-heavy term texts from the fixed operator table and
// records how a reference SWI-Prolog reads them (write_canonical form, or
// syntax_error). Output: ../data/precedence_golden.json
const fs = require('fs');
const path = require('path');
const SWIPL = require('swipl-wasm');

// mulberry32: small deterministic PRNG so the corpus is reproducible.
function rng(seed) {
  return () => {
    seed |= 0; seed = (seed + 0x6D2B79F5) | 0;
    let t = Math.imul(seed ^ (seed >>> 15), 1 | seed);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}
const rand = rng(20260412);
const pick = (xs) => xs[Math.floor(rand() * xs.length)];

const infix = [
  [1100, 'xfy', ';'], [1050, 'xfy', '->'], [1000, 'xfy', ','],
  [700, 'xfx', '='], [700, 'xfx', '\\='], [700, 'xfx', '=='], [700, 'xfx', '\\=='],
  [700, 'xfx', '=:='], [700, 'xfx', '=\\='], [700, 'xfx', '<'], [700, 'xfx', '>'],
  [700, 'xfx', '=<'], [700, 'xfx', '>='], [700, 'xfx', 'is'],
  [500, 'yfx', '+'], [500, 'yfx', '-'], [400, 'yfx', '*'], [400, 'yfx', '/'],
  [400, 'yfx', 'mod'],
];
const prefix = [[900, 'fy', '\\+'], [200, 'fy', '-']];
const atoms = ['a', 'b', 'c', 'foo', "'hello world'", '[]'];
const numbers = ['0', '1', '2', '17', '-1', '-3', '1.5', '0.25'];

// Each generator returns {text, prio}. Children are parenthesized when the
// priority demands it; sometimes deliberately not (to probe clashes) and
// sometimes gratuitously.
function gen(depth) {
  const r = rand();
  if (depth <= 0 || r < 0.2) {
    return { text: rand() < 0.5 ? pick(atoms) : pick(numbers), prio: 0 };
  }
  if (r < 0.3) {
    const n = 1 + Math.floor(rand() * 3);
    const args = [];
    for (let i = 0; i < n; i++) args.push(wrap(gen(depth - 1), 999, 0.02));
    return { text: `${pick(['f', 'g', 'h'])}(${args.join(', ')})`, prio: 0 };
  }
  if (r < 0.38) {
    const n = 1 + Math.floor(rand() * 3);
    const items = [];
    for (let i = 0; i < n; i++) items.push(wrap(gen(depth - 1), 999, 0.02));
    const tail = rand() < 0.3 ? ` | ${pick(['T', 'b', '[x]'].slice(1))}` : '';
    return { text: `[${items.join(', ')}${tail}]`, prio: 0 };
  }
  if (r < 0.5) {
    const [p, type, name] = pick(prefix);
    const argMax = type === 'fy' ? p : p - 1;
    const arg = wrap(gen(depth - 1), argMax, 0.05);
    // keep "-" away from a following numeric literal and from '(' so the
    // text always means prefix-operator application
    const sep = ' ';
    const argText = /^[-0-9(]/.test(arg) ? `(${arg})` : arg;
    return { text: `${name}${sep}${argText}`, prio: p };
  }
  const [p, type, name] = pick(infix);
  const leftMax = type === 'yfx' ? p : p - 1;
  const rightMax = type === 'xfy' ? p : p - 1;
  const l = wrap(gen(depth - 1), leftMax, 0.08);
  const rr = wrap(gen(depth - 1), rightMax, 0.08);
  return { text: `${l} ${name} ${rr}`, prio: p };
}

function wrap(t, max, clashRate) {
  if (t.prio > max) {
    return rand() < clashRate ? t.text : `(${t.text})`;
  }
  return rand() < 0.1 ? `(${t.text})` : t.text;
}

(async () => {
  const swipl = await SWIPL({ arguments: ['-q'] });
  swipl.FS.writeFile('/helpers.pl', fs.readFileSync(path.join(__dirname, 'helpers.pl'), 'utf8'));
  swipl.prolog.query("consult('/helpers.pl')").once();
  const out = [];
  const seen = new Set();
  while (out.length < 100) {
    const t = gen(4);
    if (seen.has(t.text)) continue;
    seen.add(t.text);
    const res = swipl.prolog.query('canonical_of(S, L)', { S: t.text }).once();
    const line = res.L.v !== undefined ? res.L.v : String(res.L);
    const [status, canonical] = line.split('\t');
    out.push(status === 'ok' ? { text: t.text, canonical } : { text: t.text, syntax_error: true });
  }
  fs.writeFileSync(path.join(__dirname, '..', 'data', 'precedence_golden.json'),
                   JSON.stringify(out, null, 2) + '\n');
  const errs = out.filter((e) => e.syntax_error).length;
  console.log(`wrote ${out.length} terms (${errs} syntax errors)`);
})();
