/** Interstitial overlay: blur the visited page, block interaction with it,
 * and mask the site name while the explorer is shown on top. */

export const MASKED_NAME = '••••••••';

export interface OverlayModel {
  enabled: boolean;
  /** shown instead of the real domain wherever the UI names the site */
  siteNameText: string;
  blurUnderlying: boolean;
  blockPointerEvents: boolean;
}

export function buildOverlayModel(domain: string, interstitial: boolean): OverlayModel {
  return {
    enabled: interstitial,
    siteNameText: interstitial ? MASKED_NAME : domain,
    blurUnderlying: interstitial,
    blockPointerEvents: interstitial,
  };
}

/** Apply (or remove) the interstitial treatment on the underlying page
 * element; returns the overlay element hosting the explorer. */
export function applyInterstitial(page: HTMLElement, model: OverlayModel, doc: Document): HTMLElement {
  const existing = doc.getElementById('weblens-overlay');
  if (!model.enabled) {
    page.style.filter = '';
    page.style.pointerEvents = '';
    page.removeAttribute('aria-hidden');
    existing?.remove();
    return existing ?? doc.createElement('div');
  }

  page.style.filter = 'blur(8px)';
  page.style.pointerEvents = 'none';
  page.setAttribute('aria-hidden', 'true');

  const overlay = existing ?? doc.createElement('div');
  overlay.id = 'weblens-overlay';
  overlay.style.position = 'fixed';
  overlay.style.inset = '0';
  overlay.style.pointerEvents = 'auto';
  overlay.style.zIndex = '9999';
  if (!existing) {
    doc.body.appendChild(overlay);
  }
  return overlay;
}
