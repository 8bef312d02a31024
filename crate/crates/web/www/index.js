import init, { decide, combine, complement, sample } from "./pkg/inss_web.js";

const $ = (id) => document.getElementById(id);

function show(target, fn) {
  try {
    target.textContent = fn();
    target.classList.remove("error");
  } catch (e) {
    target.textContent = e.message ?? String(e);
    target.classList.add("error");
  }
}

await init();

$("decide-doc").value = sample("blouse-choice");
$("left-doc").value = sample("blouses-f");
$("right-doc").value = sample("blouses-g");

$("decide-run").onclick = () =>
  show($("decide-out"), () => decide($("decide-doc").value, $("decide-params").value));
$("combine-run").onclick = () =>
  show($("combine-out"), () => combine($("op").value, $("left-doc").value, $("right-doc").value));
$("complement-run").onclick = () =>
  show($("combine-out"), () => complement($("left-doc").value));
