// Counts mutation sites per corpus program and operator with the Prolog
// scanner in site_counts.pl. Output is frozen as tests/data/site_counts.json.
const fs = require('fs');
const path = require('path');
const SWIPL = require('swipl-wasm');

const corpusDir = path.join(__dirname, '..', '..', 'corpus');

(async () => {
  const swipl = await SWIPL({ arguments: ['-q'] });
  swipl.FS.writeFile('/site_counts.pl', fs.readFileSync(path.join(__dirname, 'site_counts.pl'), 'utf8'));
  swipl.prolog.query("consult('/site_counts.pl')").once();
  const programs = fs.readdirSync(corpusDir).filter((f) => f.endsWith('.pl') && !f.endsWith('_tests.pl')).sort();
  const report = {};
  for (const file of programs) {
    const name = file.replace(/\.pl$/, '');
    swipl.FS.writeFile(`/${file}`, fs.readFileSync(path.join(corpusDir, file), 'utf8'));
    const res = swipl.prolog
      .query(`file_counts('/${file}', Cs), findall(S, (member(O-N, Cs), format(string(S), "~w=~w", [O, N])), Ss), atomic_list_concat(Ss, ',', L)`)
      .once();
    const line = res.L.v !== undefined ? res.L.v : String(res.L);
    report[name] = {};
    for (const kv of line.split(',')) {
      const [op, n] = kv.split('=');
      report[name][op] = Number(n);
    }
  }
  console.log(JSON.stringify(report, null, 2));
})();
