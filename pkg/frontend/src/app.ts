import { Api } from './api.js';
import { ExplorerController } from './controller.js';
import { forceLayout } from './layout.js';
import { badgeText, canUndo, historyLength } from './model.js';
import { renderBadge, renderQuiver, renderThumbnail } from './render.js';

const api = new Api(location.origin.replace(/:\d+$/, ':8477'));
const controller = new ExplorerController(api);

const scene = document.getElementById('scene')!;
const badge = document.getElementById('badge')!;
const status = document.getElementById('status')!;
const undoButton = document.getElementById('undo') as HTMLButtonElement;
const orbitButton = document.getElementById('orbit') as HTMLButtonElement;
const gallery = document.getElementById('gallery')!;

controller.onChange((vm) => {
  scene.innerHTML = renderQuiver(vm.quiver, vm.layout);
  badge.innerHTML = renderBadge(badgeText(vm));
  undoButton.disabled = !canUndo(vm);
  status.textContent = vm.notice ?? `${historyLength(vm)} mutations`;
});

scene.addEventListener('click', (event) => {
  const target = (event.target as Element).closest('[data-vertex]');
  if (!target) return;
  const vertex = Number(target.getAttribute('data-vertex'));
  void controller.clickVertex(vertex);
});

undoButton.addEventListener('click', () => {
  void controller.undo();
});

orbitButton.addEventListener('click', async () => {
  gallery.innerHTML = 'enumerating…';
  try {
    const members = await api.enumerate(controller.state.quiver, 500);
    const cells = await Promise.all(
      members.map(async (member) => {
        const classification = await api.classify(member.quiver);
        return renderThumbnail(
          member.quiver,
          forceLayout(member.quiver),
          classification.verdict,
        );
      }),
    );
    gallery.innerHTML = cells.join('');
  } catch (error) {
    gallery.textContent = String(error);
  }
});

const params = new URLSearchParams(location.search);
const n = Number(params.get('n') ?? 4);
const m = Number(params.get('m') ?? 2);
void controller.loadStandard(n, m).catch((error) => {
  status.textContent = String(error);
});
