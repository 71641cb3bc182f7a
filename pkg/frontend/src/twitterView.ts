/** Twitter window render model: co-shared reliability and bot count. */

import type { ViewState } from './state.js';
import type { SceneDocument } from './types.js';

export const EMPTY_NOTICE = 'no Twitter activity recorded';

export interface TwitterRenderModel {
  visible: boolean;
  emptyNotice: string | null;
  percentText: string;
  botText: string;
  accountsText: string;
}

export function buildTwitterModel(scene: SceneDocument, state: ViewState): TwitterRenderModel {
  const twitter = scene.twitter;
  const empty = twitter.mentioning_accounts === 0;
  const bots = twitter.bot_accounts;
  return {
    visible: state.twitterOpen,
    emptyNotice: empty ? EMPTY_NOTICE : null,
    percentText: `${Math.round(twitter.percent_controversial_coshared)}% controversial`,
    botText: `${bots} bot ${bots === 1 ? 'account' : 'accounts'}`,
    accountsText: `${twitter.mentioning_accounts} mentioning ${
      twitter.mentioning_accounts === 1 ? 'account' : 'accounts'
    }`,
  };
}
